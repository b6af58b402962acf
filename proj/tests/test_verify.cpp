#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epg/numeric.hpp"
#include "epg/verify.hpp"

using namespace epg;

TEST_CASE("hodge oracle reproduces the classical hypersurface values") {
  Series k3 = hodge_oracle(4, 4);
  CHECK(k3.coeff(Rational(0), Rational(-1)) == Cyclo(Rational(2)));
  CHECK(k3.coeff(Rational(0), Rational(0)) == Cyclo(Rational(20)));
  CHECK(k3.coeff(Rational(0), Rational(1)) == Cyclo(Rational(2)));
  CHECK(hodge_oracle(3, 3).is_zero());
  CHECK(hodge_oracle(2, 2).coeff(Rational(0), Rational(0)) ==
        Cyclo(Rational(2)));
  Series quintic = hodge_oracle(5, 5);
  CHECK(quintic.coeff(Rational(0), make_rational(-1, 2)) ==
        Cyclo(Rational(-100)));
  CHECK(quintic.coeff(Rational(0), make_rational(3, 2)) ==
        Cyclo(Rational(1)) - Cyclo(Rational(1)));  // zero
}

TEST_CASE("spectrum oracle on one-variable singularities") {
  Series a1 = spectrum_oracle(WeightSystem({1}, 2));
  CHECK(a1.coeff(Rational(0), make_rational(1, 2)) == Cyclo(Rational(1)));
  CHECK(a1.term_count() == 1);
  Series a2 = spectrum_oracle(WeightSystem({1}, 3));
  CHECK(a2.coeff(Rational(0), make_rational(1, 3)) == Cyclo(Rational(1)));
  CHECK(a2.coeff(Rational(0), make_rational(2, 3)) == Cyclo(Rational(1)));
  CHECK(a2.term_count() == 2);
}

TEST_CASE("jacobi laws on trivial inputs") {
  // constant 2 with index 0 passes all three laws
  GenusReport constant;
  constant.series =
      Series::constant(2, Rational(2), Rational(4), Cyclo(Rational(2)));
  constant.formula = "constant";
  constant.params = "{}";
  constant.dimension = 0;
  CHECK(check_jacobi(constant).passed());

  // the same series declared index 1 breaks the stripe law
  constant.dimension = 2;
  CheckReport r = check_jacobi(constant);
  CHECK(r.status == CheckReport::Status::Fail);
  CHECK(!r.detail.empty());

  // identically zero passes trivially
  GenusReport zero;
  zero.series = Series(2, Rational(2), Rational(4));
  zero.dimension = 2;
  CHECK(check_jacobi(zero).passed());
}

TEST_CASE("jacobi check is inconclusive below the index window") {
  GenusReport r;
  r.series = Series::constant(2, Rational(1), Rational(1), Cyclo(Rational(1)));
  r.dimension = 4;  // index 2 needs |y| window >= 5
  CHECK(check_jacobi(r).status == CheckReport::Status::Inconclusive);
}

TEST_CASE("negative control: mismatched degrees fail with a location") {
  GenusOptions opt{Rational(1), Rational(5)};
  WeightSystem w4(std::vector<long>(4, 1), 4);
  GenusReport lg = lg_genus(w4, GroupSpec::cyclic(w4.j_w()), opt);
  GenusReport cy = cy_fermat_genus(5, opt);
  auto mm = Series::compare(lg.series, cy.series);
  CHECK(!mm.equal);
  CHECK(mm.describe().find("q^") != std::string::npos);
}

TEST_CASE("theta_numeric oddness and series agreement") {
  long digits = 40;
  BigFloat::default_precision(digits + 15);
  BigComplex z{BigFloat("0.11"), BigFloat("0.13")};
  BigComplex tau{BigFloat("0.07"), BigFloat("1.21")};
  BigComplex plus = theta_numeric(z, tau, digits);
  BigComplex minus = theta_numeric(-z, tau, digits);
  CHECK(abs_val(plus + minus) < pow(BigFloat(10), -30));

  BigComplex zero = theta_numeric(BigComplex{BigFloat(0), BigFloat(0)}, tau,
                                  digits);
  CHECK(abs_val(zero) < pow(BigFloat(10), -30));
}

TEST_CASE("series evaluation matches the numeric theta backend") {
  long digits = 40;
  BigFloat::default_precision(digits + 15);
  BigComplex z{BigFloat("0.11"), BigFloat("0.13")};
  BigComplex tau{BigFloat("0.07"), BigFloat("1.21")};
  ThetaArg arg(Rational(1), Rational(0), Rational(0));
  Series s = theta_scalar(arg, 0, 8, Rational(6), Rational(8));
  BigComplex se = series_eval(s, z, tau, digits);
  BigComplex nu = theta_numeric(z, tau, digits);
  // |q|^{6} with Im tau = 1.21 bounds the dropped tail well below 1e-15
  CHECK(abs_val(se - nu) < pow(BigFloat(10), -15));
}

TEST_CASE("window stability harness accepts and reports regions") {
  GenusOptions base{Rational(1), Rational(0)};
  auto compute = [&](const Rational& yw) {
    GenusOptions opt{Rational(1), yw};
    return cy_fermat_genus(4, opt).series;
  };
  CheckReport r = check_window_stability("cy_fermat n=4", compute,
                                         Rational(4), Rational(8));
  CHECK(r.passed());
  CHECK(r.region.find("|y|<=4") != std::string::npos);
}

TEST_CASE("campaign runner dispatches and sorts") {
  std::string text = R"([
    {"check": "lgcy", "n": 2, "qmax": 1, "ywindow": 4},
    {"check": "jacobi", "fermat": 3, "qmax": 1, "ywindow": 4}
  ])";
  auto reports = run_campaign(text);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].name < reports[1].name);
  for (const auto& r : reports) CHECK(r.passed());
  CHECK_THROWS_AS(run_campaign("[{\"check\": \"nope\"}]"),
                  std::invalid_argument);
}
