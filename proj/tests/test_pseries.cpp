#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epg/pseries.hpp"

using namespace epg;

namespace {
Series one(long d, Rational qm, Rational yw) {
  return Series::constant(d, qm, yw, Cyclo(Rational(1)));
}
}  // namespace

TEST_CASE("ring laws with fractional exponents") {
  long d = 8;
  Series a(d, Rational(3), Rational(4));
  a.add_term(Rational(1, 8), Rational(1, 2), Cyclo(Rational(1)));
  a.add_term(Rational(1), Rational(-1), Cyclo(Rational(2)));
  Series b(d, Rational(3), Rational(4));
  b.add_term(Rational(0), Rational(0), Cyclo(Rational(1)));
  b.add_term(Rational(1, 4), Rational(2), Cyclo(Rational(-3)));
  Series c(d, Rational(3), Rational(4));
  c.add_term(Rational(1, 2), Rational(1), Cyclo(Rational(5)));

  CHECK(Series::compare(a * (b + c), a * b + a * c).equal);
  CHECK(Series::compare(a * b, b * a).equal);
  CHECK(Series::compare((a * b) * c, a * (b * c)).equal);
  CHECK(Series::compare(a - a, Series(d, Rational(3), Rational(4))).equal);
}

TEST_CASE("truncation region clips on insert and tightens on multiply") {
  Series a(4, Rational(2), Rational(1));
  a.add_term(Rational(3), Rational(0), Cyclo(Rational(1)));  // beyond qmax
  a.add_term(Rational(0), Rational(2), Cyclo(Rational(1)));  // beyond ywindow
  CHECK(a.is_zero());

  Series b = one(4, Rational(2), Rational(3));
  Series c = one(4, Rational(5), Rational(1));
  Series p = b * c;
  CHECK(p.qmax() == Rational(2));
  CHECK(p.ywindow() == Rational(1));
}

TEST_CASE("inversion round-trips and respects the region rule") {
  long d = 4;
  Series a(d, Rational(3), Rational(2));
  a.add_term(Rational(0), Rational(0), Cyclo(Rational(1)));
  a.add_term(Rational(1, 2), Rational(1), Cyclo(Rational(-1)));
  a.add_term(Rational(1), Rational(-1), Cyclo(Rational(1, 2)));
  Series ia = a.inverted();
  CHECK(Series::compare(a * ia, one(d, Rational(3), Rational(2))).equal);

  // Laurent lead in y: (y^{-1} - y)^{-1}
  Series u(d, Rational(2), Rational(3));
  u.add_term(Rational(0), Rational(-1), Cyclo(Rational(1)));
  u.add_term(Rational(0), Rational(1), Cyclo(Rational(-1)));
  Series iu = u.inverted();
  // expansion direction: (y^{-1} - y)^{-1} = y(1 + y^2 + y^4 + ...)
  CHECK(iu.coeff(Rational(0), Rational(1)) == Cyclo(Rational(1)));
  CHECK(iu.coeff(Rational(0), Rational(3)) == Cyclo(Rational(1)));
  CHECK(iu.coeff(Rational(0), Rational(-1)) == Cyclo());
  CHECK(Series::compare(u * iu, one(d, Rational(2), Rational(3))).equal);

  // positive lead q-exponent shrinks the trusted region by twice the lead
  Series v(d, Rational(3), Rational(1));
  v.add_term(Rational(1, 2), Rational(0), Cyclo(Rational(1)));
  v.add_term(Rational(1), Rational(0), Cyclo(Rational(1)));
  Series iv = v.inverted();
  CHECK(iv.qmax() == Rational(2));
  CHECK(iv.min_q_exponent() == Rational(-1, 2));
  CHECK(Series::compare(v * iv, one(d, Rational(3), Rational(1))).equal);

  CHECK_THROWS_WITH_AS(Series(d, Rational(2), Rational(2)).inverted(),
                       doctest::Contains("singular leading term"),
                       std::domain_error);
}

TEST_CASE("substitutions") {
  long d = 4;
  Series a(d, Rational(3), Rational(2));
  a.add_term(Rational(1, 2), Rational(1), Cyclo(Rational(1)));
  a.add_term(Rational(1), Rational(-1), Cyclo(Rational(3)));

  SUBCASE("z -> z + 1/4 multiplies each term by e^{2 pi i ey / 4}") {
    Series s = a.subst_y_scale(Rational(1, 4), Rational(0));
    CHECK(s.coeff(Rational(1, 2), Rational(1)) ==
          Cyclo::root_of_unity(1, 4, 4));
    CHECK(s.coeff(Rational(1), Rational(-1)) ==
          Cyclo(Rational(3)) * Cyclo::root_of_unity(3, 4, 4));
  }
  SUBCASE("z -> z + tau shifts q-exponents by ey and tightens qmax") {
    Series s = a.subst_y_scale(Rational(0), Rational(1));
    CHECK(s.qmax() == Rational(1));
    CHECK(s.coeff(Rational(0), Rational(-1)) == Cyclo(Rational(3)));
    // the q^{1/2} y term shifts to q^{3/2}, beyond the tightened region
    CHECK(s.coeff(Rational(3, 2), Rational(1)) == Cyclo());
  }
  SUBCASE("tau -> tau + 1 multiplies by e^{2 pi i eq}") {
    Series s = a.subst_q_phase();
    CHECK(s.coeff(Rational(1, 2), Rational(1)) ==
          Cyclo::root_of_unity(1, 2, 4));
    CHECK(s.coeff(Rational(1), Rational(-1)) == Cyclo(Rational(3)));
  }
}

TEST_CASE("q_limit keeps the constant slice and rejects poles") {
  Series a(2, Rational(2), Rational(2));
  a.add_term(Rational(0), Rational(1), Cyclo(Rational(7)));
  a.add_term(Rational(1), Rational(0), Cyclo(Rational(1)));
  Series l = a.q_limit();
  CHECK(l.coeff(Rational(0), Rational(1)) == Cyclo(Rational(7)));
  CHECK(l.coeff(Rational(1), Rational(0)) == Cyclo());

  Series b(2, Rational(2), Rational(2));
  b.add_term(Rational(-1, 2), Rational(0), Cyclo(Rational(1)));
  CHECK_THROWS_AS(b.q_limit(), std::domain_error);
}

TEST_CASE("denominator lift and mixed-denominator compare") {
  Series a(2, Rational(1), Rational(1));
  a.add_term(Rational(1, 2), Rational(0), Cyclo(Rational(1)));
  Series b(6, Rational(1), Rational(1));
  b.add_term(Rational(1, 2), Rational(0), Cyclo(Rational(1)));
  CHECK(Series::compare(a, b).equal);
  b.add_term(Rational(1, 3), Rational(0), Cyclo(Rational(1)));
  auto m = Series::compare(a, b);
  CHECK_FALSE(m.equal);
  CHECK(m.eq == Rational(1, 3));
}

TEST_CASE("json round trip preserves terms and bounds") {
  Series a(8, Rational(5, 2), Rational(3));
  a.add_term(Rational(1, 8), Rational(-1, 2),
             Cyclo::root_of_unity(1, 8, 8) * Cyclo(Rational(2, 3)));
  a.add_term(Rational(2), Rational(1), Cyclo(Rational(-5)));
  Series b = Series::from_json(a.to_json());
  CHECK(b.denom() == 8);
  CHECK(b.qmax() == Rational(5, 2));
  CHECK(b.ywindow() == Rational(3));
  CHECK(Series::compare(a, b).equal);
  CHECK(b.coeff(Rational(1, 8), Rational(-1, 2)) ==
        Cyclo::root_of_unity(1, 8, 8) * Cyclo(Rational(2, 3)));
}
