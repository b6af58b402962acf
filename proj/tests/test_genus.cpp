#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epg/genus.hpp"

using namespace epg;

TEST_CASE("two-point LG model gives the constant 2") {
  WeightSystem w({1, 1}, 2);
  GenusOptions opt{Rational(2), Rational(4)};
  GenusReport lg = lg_genus(w, GroupSpec::cyclic(w.j_w()), opt);
  Series expect =
      Series::constant(lg.series.denom(), Rational(2), Rational(4),
                       Cyclo(Rational(2)));
  CHECK(Series::compare(lg.series, expect).equal);
  CHECK(lg.dimension == 0);
  CHECK(lg.cy);
}

TEST_CASE("cubic curve genus vanishes on both pipelines") {
  GenusOptions opt{Rational(2), Rational(6)};
  WeightSystem w({1, 1, 1}, 3);
  GenusReport lg = lg_genus(w, GroupSpec::cyclic(w.j_w()), opt);
  GenusReport cy = cy_fermat_genus(3, opt);
  CHECK(lg.series.is_zero());
  CHECK(cy.series.is_zero());
}

TEST_CASE("quartic K3: q^0 slice and symmetry") {
  GenusOptions opt{Rational(1), Rational(6)};
  GenusReport cy = cy_fermat_genus(4, opt);
  Series q0 = cy.series.q_limit();
  CHECK(q0.coeff(Rational(0), Rational(-1)) == Cyclo(Rational(2)));
  CHECK(q0.coeff(Rational(0), Rational(0)) == Cyclo(Rational(20)));
  CHECK(q0.coeff(Rational(0), Rational(1)) == Cyclo(Rational(2)));
  // y -> 1/y symmetry of the whole truncation
  bool symmetric = true;
  cy.series.for_each([&](const Rational& eq, const Rational& ey,
                         const Cyclo& c) {
    if (cy.series.coeff(eq, -ey) != c) symmetric = false;
  });
  CHECK(symmetric);
}

TEST_CASE("weighted pipeline reduces to the Fermat one at unit weights") {
  GenusOptions opt{Rational(2), Rational(7)};
  WeightSystem w({1, 1, 1, 1}, 4);
  GenusReport weighted = weighted_cy_genus(w, opt);
  GenusReport fermat = cy_fermat_genus(4, opt);
  CHECK(Series::compare(weighted.series, fermat.series).equal);
}

TEST_CASE("origin contribution at c=1 matches the LG genus") {
  GenusOptions opt{Rational(2), Rational(6)};
  WeightSystem w({1, 2, 3}, 6);
  GenusReport lg = lg_genus(w, GroupSpec::cyclic(w.j_w()), opt);
  GenusReport origin = origin_contrib_equivariant(w, Rational(1), opt);
  CHECK(Series::compare(lg.series, origin.series).equal);
}

TEST_CASE("hybrid (2,2) phases all vanish") {
  GenusOptions opt{Rational(1), Rational(5)};
  HybridSpec spec{2, 2};
  for (auto ph : {HybridPhase::H1, HybridPhase::H2, HybridPhase::H3}) {
    GenusReport r = hybrid_genus(spec, ph, opt);
    CHECK(r.series.is_zero());
    CHECK(r.dimension == 1);
  }
}

TEST_CASE("non-CY weight data is flagged") {
  WeightSystem w({1, 1}, 3);
  CHECK(!w.cy_flag());
  GenusOptions opt{Rational(1), Rational(4)};
  GenusReport lg = lg_genus(w, GroupSpec::cyclic(w.j_w()), opt);
  CHECK(!lg.cy);
}

TEST_CASE("genus report JSON round-trips the series") {
  GenusOptions opt{Rational(1), Rational(5)};
  GenusReport cy = cy_fermat_genus(4, opt);
  std::string text = cy.to_json();
  CHECK(text.find("\"formula\": \"cy_fermat\"") != std::string::npos);
  CHECK(text.find("\"dimension\": 2") != std::string::npos);
}
