#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epg/cohring.hpp"

using namespace epg;

namespace {

Series sconst(long v, long N = 4, Rational qmax = Rational(3),
              Rational yw = Rational(3)) {
  return Series::constant(N, qmax, yw, Cyclo(Rational(v)));
}

Series smono(long v, const Rational& eq, const Rational& ey, long N = 4,
             Rational qmax = Rational(3), Rational yw = Rational(3)) {
  return Series::monomial(N, qmax, yw, Cyclo(Rational(v)), eq, ey);
}

}  // namespace

TEST_CASE("truncated ring arithmetic and pushforward") {
  CohomRing ring{{3, 2}};  // K[x1,x2]/(x1^3, x2^2)
  CHECK(ring.nilpotency_degree() == 3);

  CohomSeries x1 = CohomSeries::monomial(ring, {1, 0}, sconst(1));
  CohomSeries x2 = CohomSeries::monomial(ring, {0, 1}, sconst(1));
  CohomSeries one = CohomSeries::constant(ring, sconst(1));

  // (x1 + x2)^3 = 3 x1^2 x2 + (vanishing monomials)
  CohomSeries p = (x1 + x2).pow(3);
  CHECK(Series::compare(p.coeff({2, 1}), sconst(3)).equal);
  CHECK(p.coeff({1, 1}).is_zero());
  CHECK(Series::compare(p.pushforward(), sconst(3)).equal);
  CHECK((x1 + x2).pow(4).is_zero());

  // top truncation: x1^3 = 0, x2^2 = 0
  CHECK(x1.pow(3).is_zero());
  CHECK(x2.pow(2).is_zero());

  // pushforward picks only the top monomial
  CHECK((one + x1).pushforward().is_zero());
}

TEST_CASE("nilpotent-corrected inversion") {
  CohomRing ring{{4}};
  Series a0 = sconst(1) + smono(2, Rational(1), Rational(0));
  CohomSeries e = CohomSeries::constant(ring, a0) +
                  CohomSeries::monomial(ring, {1}, smono(1, make_rational(1, 2),
                                                         Rational(1))) +
                  CohomSeries::monomial(ring, {3}, sconst(5));
  CohomSeries prod = e * e.inverted();
  CHECK(Series::compare(prod.coeff({0}), sconst(1)).equal);
  for (int k = 1; k < 4; ++k) CHECK(prod.coeff({k}).is_zero());
}

TEST_CASE("inversion respects the series region rule") {
  CohomRing ring{{2}};
  // x^0 part = q (1 - y): lead exponent 1, so the inverse region shrinks
  // from qmax 3 to qmax 1.
  Series a0 = smono(1, Rational(1), Rational(0)) -
              smono(1, Rational(1), Rational(1));
  CohomSeries e = CohomSeries::constant(ring, a0) +
                  CohomSeries::monomial(ring, {1}, sconst(1));
  CohomSeries inv = e.inverted();
  // x^0 coefficient is 1/a0 (trusted to 3 - 2*1), x^1 is -1/a0^2 whose
  // completeness drops by another lead unit.
  CHECK(inv.coeff({0}).qmax() == Rational(1));
  CHECK(inv.coeff({1}).qmax() == Rational(0));
  CHECK(inv.qmax() == Rational(0));
  CohomSeries prod = (e * inv);
  CHECK(Series::compare(prod.coeff({0}),
                        sconst(1).restricted(Rational(1), Rational(3)))
            .equal);
}

TEST_CASE("fixed loci partition coordinates by character pairs") {
  std::vector<Rational> g = {Rational(0), make_rational(1, 2),
                             make_rational(1, 2), Rational(0)};
  std::vector<Rational> h = {Rational(0), Rational(0), make_rational(1, 2),
                             make_rational(1, 2)};
  auto loci = fixed_loci(4, g, h);
  REQUIRE(loci.size() == 4);
  for (const auto& l : loci) {
    CHECK(l.coords.size() == 1);
    CHECK(l.dim() == 0);
  }

  // trivial action: one locus, full dimension
  std::vector<Rational> z(4, Rational(0));
  auto whole = fixed_loci(4, z, z);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].dim() == 3);

  auto roots = tangent_chern_roots(whole[0], 4, z, z);
  REQUIRE(roots.size() == 4);
  int flagged = 0;
  for (const auto& r : roots) {
    CHECK(r.char_g == 0);
    CHECK(r.char_h == 0);
    if (r.flagged_trivial) ++flagged;
  }
  CHECK(flagged == 1);
}

TEST_CASE("tangent roots relative to the locus character") {
  std::vector<Rational> g = {Rational(0), Rational(0), make_rational(1, 3),
                             make_rational(2, 3)};
  std::vector<Rational> h = {make_rational(1, 3), make_rational(1, 3),
                             Rational(0), Rational(0)};
  auto loci = fixed_loci(4, g, h);
  const FixedLocus* pair01 = nullptr;
  for (const auto& l : loci)
    if (l.coords == std::vector<int>{0, 1}) pair01 = &l;
  REQUIRE(pair01 != nullptr);
  auto roots = tangent_chern_roots(*pair01, 4, g, h);
  CHECK(roots[0].char_g == 0);
  CHECK(roots[0].char_h == 0);
  CHECK(roots[0].flagged_trivial);
  CHECK(roots[2].char_g == make_rational(1, 3));
  CHECK(roots[2].char_h == mod1(make_rational(-1, 3)));
  CHECK(roots[3].char_g == make_rational(2, 3));
}
