// End-to-end acceptance checks: every correspondence and soundness claim
// the library is built around, at pinned parameters and tolerances.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epg/numeric.hpp"
#include "epg/verify.hpp"

using namespace epg;

namespace {

GenusOptions opts(long qmax, long yw) {
  return {Rational(qmax), Rational(yw)};
}

}  // namespace

TEST_CASE("1. LG/CY correspondence, Fermat n = 2..5") {
  for (long n = 2; n <= 5; ++n) {
    CheckReport r = verify_lg_cy(n, opts(3, n + 4));
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed());
  }
}

TEST_CASE("2. weighted LG/CY") {
  CheckReport ell = verify_weighted_lg_cy(WeightSystem({1, 2, 3}, 6),
                                          opts(3, 7));
  INFO(ell.detail);
  CHECK(ell.passed());
  // both sides identically 0 through q^3
  GenusReport lg = lg_genus(WeightSystem({1, 2, 3}, 6),
                            GroupSpec::cyclic(WeightSystem({1, 2, 3}, 6).j_w()),
                            opts(3, 7));
  CHECK(lg.series.is_zero());

  CheckReport k3 = verify_weighted_lg_cy(WeightSystem({3, 1, 1, 1}, 6),
                                         opts(3, 8));
  INFO(k3.detail);
  CHECK(k3.passed());

  // (3,1,1,1;6) and the quartic Fermat are both the K3 genus
  GenusReport weighted = weighted_cy_genus(WeightSystem({3, 1, 1, 1}, 6),
                                           opts(3, 8));
  GenusReport quartic = cy_fermat_genus(4, opts(3, 8));
  auto mm = Series::compare(weighted.series, quartic.series);
  INFO(mm.describe());
  CHECK(mm.equal);
}

TEST_CASE("3. hybrid phases agree pairwise") {
  for (auto [n, m] : {std::pair<long, long>{2, 2}, {2, 3}, {3, 3}}) {
    CheckReport r = verify_hybrid(HybridSpec{n, m}, opts(2, 6));
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed());
  }
  // (2,3) is a K3: q^0 slice equals the Hodge oracle for (4,4)
  GenusReport h = hybrid_genus(HybridSpec{2, 3}, HybridPhase::H1, opts(2, 6));
  auto mm = Series::compare(h.series.q_limit(), hodge_oracle(4, 4));
  INFO(mm.describe());
  CHECK(mm.equal);
}

TEST_CASE("4. Jacobi-form laws and numeric S-transformation") {
  CheckReport k3 = check_jacobi(cy_fermat_genus(4, opts(3, 8)));
  INFO(k3.detail);
  CHECK(k3.passed());
  CheckReport quintic = check_jacobi(cy_fermat_genus(5, opts(3, 9)));
  INFO(quintic.detail);
  CHECK(quintic.passed());

  for (long n : {4L, 5L}) {
    CheckReport s = check_s_law(n, default_samples(), 120, -20);
    INFO(s.detail);
    CHECK(s.passed());
  }
}

TEST_CASE("5. identity-sector q^0 slice is the Steenbrink spectrum") {
  std::vector<WeightSystem> cases = {WeightSystem({1}, 2),
                                     WeightSystem({1}, 3),
                                     WeightSystem({1, 1, 1}, 3),
                                     WeightSystem({1, 1, 1, 1}, 4),
                                     WeightSystem({1, 2, 3}, 6)};
  for (const auto& w : cases) {
    long n = w.n();
    Series sector = lg_identity_sector(w, opts(0, 2 * n)).q_limit();
    Series spec = spectrum_oracle(w);
    Series expect = spec.lift_denom(lcm_long(spec.denom(), 2))
                        .mul_monomial(Cyclo(Rational(n % 2 ? -1 : 1)),
                                      Rational(0), -make_rational(n, 2));
    auto mm = Series::compare(sector, expect);
    INFO("W with n=", n, " D=", w.degree, ": ", mm.describe());
    CHECK(mm.equal);
    CHECK(!mm.empty_region);
  }
}

TEST_CASE("6. chi_y specialization and Euler numbers") {
  long euler_expect[] = {2, 0, 24, -200};
  for (long n = 2; n <= 5; ++n) {
    Series q0 = cy_fermat_genus(n, opts(0, n)).series.q_limit();
    auto mm = Series::compare(q0, hodge_oracle(n, n));
    INFO("n=", n, ": ", mm.describe());
    CHECK(mm.equal);

    Rational euler(0);
    q0.for_each([&](const Rational&, const Rational&, const Cyclo& c) {
      REQUIRE(c.is_rational());
      euler += c.rational_part();
    });
    CHECK(euler == Rational(euler_expect[n - 2]));
  }
}

TEST_CASE("7. window stability, numeric cross-check, negative control") {
  // stability (W, W+4) for every genus in criteria 1-3
  for (long n = 2; n <= 5; ++n) {
    auto fermat = [&](const Rational& yw) {
      return cy_fermat_genus(n, {Rational(3), yw}).series;
    };
    auto lg = [&](const Rational& yw) {
      WeightSystem w(std::vector<long>(n, 1), n);
      return lg_genus(w, GroupSpec::cyclic(w.j_w()), {Rational(3), yw}).series;
    };
    CheckReport rf = check_window_stability("cy_fermat n=" + std::to_string(n),
                                            fermat, Rational(n + 4),
                                            Rational(n + 8));
    INFO(rf.name, ": ", rf.detail);
    CHECK(rf.passed());
    CheckReport rl = check_window_stability("lg n=" + std::to_string(n), lg,
                                            Rational(n + 4), Rational(n + 8));
    INFO(rl.name, ": ", rl.detail);
    CHECK(rl.passed());
  }
  for (auto w : {WeightSystem({1, 2, 3}, 6), WeightSystem({3, 1, 1, 1}, 6)}) {
    auto weighted = [&](const Rational& yw) {
      return weighted_cy_genus(w, {Rational(3), yw}).series;
    };
    CheckReport r = check_window_stability("weighted", weighted, Rational(8),
                                           Rational(12));
    INFO(r.detail);
    CHECK(r.passed());
  }
  for (auto [n, m] : {std::pair<long, long>{2, 2}, {2, 3}, {3, 3}}) {
    for (auto ph : {HybridPhase::H1, HybridPhase::H2, HybridPhase::H3}) {
      auto hybrid = [&](const Rational& yw) {
        return hybrid_genus(HybridSpec{n, m}, ph, {Rational(2), yw}).series;
      };
      CheckReport r = check_window_stability("hybrid", hybrid, Rational(6),
                                             Rational(10));
      INFO("(", n, ",", m, ") phase ", (int)ph, ": ", r.detail);
      CHECK(r.passed());
    }
  }

  // exact series vs the independent theta-product evaluation
  for (long n : {2L, 3L, 4L}) {
    CheckReport r = check_numeric(n, opts(3, n + 4), default_samples(), 50);
    INFO(r.detail);
    CHECK(r.passed());
  }

  // the suite must be able to fail: Fermat quartic LG vs quintic CY
  WeightSystem w4(std::vector<long>(4, 1), 4);
  GenusReport lg4 = lg_genus(w4, GroupSpec::cyclic(w4.j_w()), opts(2, 6));
  GenusReport cy5 = cy_fermat_genus(5, opts(2, 6));
  auto mm = Series::compare(lg4.series, cy5.series);
  CHECK(!mm.equal);
  CHECK(!mm.describe().empty());
}

TEST_CASE("8. equivariant origin contribution at c = 1 is the LG genus") {
  for (auto w : {WeightSystem({1, 1, 1, 1}, 4), WeightSystem({1, 2, 3}, 6)}) {
    GenusOptions opt = opts(3, w.n() + 4);
    GenusReport lg = lg_genus(w, GroupSpec::cyclic(w.j_w()), opt);
    GenusReport origin = origin_contrib_equivariant(w, Rational(1), opt);
    auto mm = Series::compare(lg.series, origin.series);
    INFO(mm.describe());
    CHECK(mm.equal);
  }
}
