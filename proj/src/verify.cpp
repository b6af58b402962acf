#include "epg/verify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "epg/numeric.hpp"

namespace epg {

using nlohmann::json;

namespace {

std::string region_str(const Rational& qmax, const Rational& yw) {
  return "q<=" + qmax.get_str() + ", |y|<=" + yw.get_str();
}

std::string region_of(const Series& a, const Series& b) {
  return region_str(std::min(a.qmax(), b.qmax()),
                    std::min(a.ywindow(), b.ywindow()));
}

CheckReport compare_series(std::string name, const Series& a,
                           const Series& b) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.region = region_of(a, b);
  auto mm = Series::compare(a, b);
  if (mm.empty_region) {
    rep.status = CheckReport::Status::Inconclusive;
    rep.detail = "empty comparison region";
  } else if (!mm.equal) {
    rep.status = CheckReport::Status::Fail;
    rep.detail = mm.describe();
  }
  return rep;
}

std::string weights_str(const WeightSystem& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.weights.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.weights[i]);
  }
  return s + ";" + std::to_string(w.degree) + ")";
}

BigComplex parse_complex(const std::string& re, const std::string& im) {
  return {BigFloat(re), BigFloat(im)};
}

}  // namespace

std::string CheckReport::to_json() const {
  const char* st = status == Status::Pass      ? "pass"
                   : status == Status::Fail    ? "fail"
                                               : "inconclusive";
  return json{{"name", name},
              {"passed", passed()},
              {"status", st},
              {"detail", detail},
              {"region", region}}
      .dump();
}

std::vector<SamplePoint> default_samples() {
  return {{"0.11", "0.07", "0.05", "1.4"},
          {"0.13", "0.04", "-0.08", "1.3"},
          {"0.09", "0.12", "0.12", "1.5"}};
}

CheckReport check_jacobi(const GenusReport& r) {
  CheckReport rep;
  rep.name = "jacobi(" + r.formula + " " + r.params + ")";
  const Series& s = r.series;
  Rational m = r.index();
  rep.region = region_str(s.qmax(), s.ywindow());
  if (s.ywindow() < 2 * m + 1) {
    rep.status = CheckReport::Status::Inconclusive;
    rep.detail = "window below 2*index + 1";
    return rep;
  }
  Cyclo sign(Rational(r.dimension % 2 ? -1 : 1));

  // (i) z -> z+1: phase e^{2 pi i ey} per term equals (-1)^{2m} globally.
  auto mm = Series::compare(s.subst_y_scale(Rational(1), Rational(0)),
                            s.scaled(sign));
  if (!mm.equal) {
    rep.status = CheckReport::Status::Fail;
    rep.detail = "z->z+1: " + mm.describe();
    return rep;
  }

  // (ii) z -> z+tau: stripes c_(A,B) and c_(A+B+m, B+2m) agree up to sign.
  long pairs = 0;
  bool ok = true;
  std::string bad;
  auto stripe = [&](const Rational& a, const Rational& b) {
    Rational a2 = a + b + m, b2 = b + 2 * m;
    if (a2 > s.qmax() || abs(b2) > s.ywindow()) return;
    if (a > s.qmax() || abs(b) > s.ywindow()) return;
    ++pairs;
    if (ok && s.coeff(a, b) != sign * s.coeff(a2, b2)) {
      ok = false;
      bad = "z->z+tau: stripe (" + a.get_str() + "," + b.get_str() +
            ") vs (" + a2.get_str() + "," + b2.get_str() + ")";
    }
  };
  s.for_each([&](const Rational& a, const Rational& b, const Cyclo&) {
    stripe(a, b);
    // the term may also be the image of a stripe partner below it
    stripe(a - (b - 2 * m) - m, b - 2 * m);
  });
  if (!ok) {
    rep.status = CheckReport::Status::Fail;
    rep.detail = bad;
    return rep;
  }
  if (pairs == 0 && !s.is_zero()) {
    rep.status = CheckReport::Status::Inconclusive;
    rep.detail = "no stripe pair fits the region";
    return rep;
  }

  // (iii) tau -> tau+1: integral q-exponents.
  mm = Series::compare(s.subst_q_phase(), s);
  if (!mm.equal) {
    rep.status = CheckReport::Status::Fail;
    rep.detail = "tau->tau+1: " + mm.describe();
  }
  return rep;
}

CheckReport verify_lg_cy(long n, const GenusOptions& opt) {
  WeightSystem w(std::vector<long>(n, 1), n);
  GenusReport lg = lg_genus(w, GroupSpec::cyclic(w.j_w()), opt);
  GenusReport cy = cy_fermat_genus(n, opt);
  return compare_series("lgcy(n=" + std::to_string(n) + ")", lg.series,
                        cy.series);
}

CheckReport verify_weighted_lg_cy(const WeightSystem& w,
                                  const GenusOptions& opt) {
  GenusReport lg = lg_genus(w, GroupSpec::cyclic(w.j_w()), opt);
  GenusReport cy = weighted_cy_genus(w, opt);
  return compare_series("weighted" + weights_str(w), lg.series, cy.series);
}

CheckReport verify_hybrid(const HybridSpec& spec, const GenusOptions& opt) {
  GenusReport h1 = hybrid_genus(spec, HybridPhase::H1, opt);
  GenusReport h2 = hybrid_genus(spec, HybridPhase::H2, opt);
  GenusReport h3 = hybrid_genus(spec, HybridPhase::H3, opt);
  std::string base =
      "hybrid(" + std::to_string(spec.n) + "," + std::to_string(spec.m) + ")";
  CheckReport r12 = compare_series(base, h1.series, h2.series);
  if (!r12.passed()) {
    r12.detail = "h1 vs h2: " + r12.detail;
    return r12;
  }
  CheckReport r13 = compare_series(base, h1.series, h3.series);
  if (!r13.passed()) r13.detail = "h1 vs h3: " + r13.detail;
  return r13;
}

Series hodge_oracle(long n, long d) {
  long k = n - 2;
  // ((1 - t^{d-1}) / (1 - t))^n = (1 + t + ... + t^{d-2})^n
  long maxdeg = (k + 1) * d - n;
  std::vector<Rational> poly{Rational(1)};
  for (long i = 0; i < n; ++i) {
    std::vector<Rational> next(std::min<long>(poly.size() + d - 2, maxdeg + 1),
                               Rational(0));
    for (size_t a = 0; a < poly.size(); ++a)
      for (long b = 0; b <= d - 2; ++b)
        if (a + b < next.size()) next[a + b] += poly[a];
    poly = std::move(next);
  }
  auto coeff_at = [&](long e) {
    return (e >= 0 && e < (long)poly.size()) ? poly[e] : Rational(0);
  };

  Series out(2, Rational(0), k >= 0 ? make_rational(k, 2) : Rational(0));
  Rational half_k = make_rational(k, 2);
  for (long p = 0; p <= k; ++p) {
    Rational c = Rational(1);  // hyperplane class h^{p,p}
    Rational prim = coeff_at((k - p + 1) * d - n);
    c += (k % 2 ? -prim : prim);
    if (c != 0)
      out.add_term(Rational(0), Rational(p) - half_k, Cyclo(c));
  }
  return out;
}

Series spectrum_oracle(const WeightSystem& w) {
  long D = w.degree;
  // In u = t^{1/D}: prod (u^{w_i} - u^D) / prod (1 - u^{w_i}); the full
  // product is a polynomial even when single factors are not.
  std::vector<Rational> num{Rational(1)}, den{Rational(1)};
  auto mul = [](std::vector<Rational>& p, long lo_exp, long hi_exp,
                const Rational& lo_c, const Rational& hi_c) {
    std::vector<Rational> r(p.size() + hi_exp, Rational(0));
    for (size_t a = 0; a < p.size(); ++a) {
      r[a + lo_exp] += p[a] * lo_c;
      r[a + hi_exp] += p[a] * hi_c;
    }
    p = std::move(r);
  };
  for (long wi : w.weights) {
    mul(num, wi, D, Rational(1), Rational(-1));
    mul(den, 0, wi, Rational(1), Rational(-1));
  }
  // ascending exact division
  std::vector<Rational> quo(num.size(), Rational(0));
  for (size_t i = 0; i < num.size(); ++i) {
    Rational c = num[i];
    if (c == 0) continue;
    quo[i] = c;
    for (size_t j = 1; j < den.size() && i + j < num.size(); ++j)
      num[i + j] -= c * den[j];
  }
  Series out(D, Rational(0), Rational(w.n()));
  for (size_t e = 0; e < quo.size(); ++e)
    if (quo[e] != 0)
      out.add_term(Rational(0), make_rational(e, D), Cyclo(quo[e]));
  return out;
}

CheckReport check_window_stability(
    const std::string& name,
    const std::function<Series(const Rational& ywindow)>& compute,
    const Rational& w1, const Rational& w2) {
  Series a = compute(w1);
  Series b = compute(w2);
  return compare_series("window(" + name + "; " + w1.get_str() + " vs " +
                            w2.get_str() + ")",
                        a, b);
}

CheckReport check_numeric(long n, const GenusOptions& opt,
                          const std::vector<SamplePoint>& samples,
                          long digits) {
  BigFloat::default_precision(static_cast<unsigned>(digits + 15));
  GenusReport r = cy_fermat_genus(n, opt);
  CheckReport rep;
  rep.name = "numeric(cy_fermat n=" + std::to_string(n) + ")";
  rep.region = region_str(r.series.qmax(), r.series.ywindow());
  for (const auto& sp : samples) {
    BigComplex z = parse_complex(sp.z_re, sp.z_im);
    BigComplex tau = parse_complex(sp.tau_re, sp.tau_im);
    BigComplex se = series_eval(r.series, z, tau, digits);
    BigComplex nu = cy_fermat_numeric(n, z, tau, digits);
    BigFloat bound = series_tail_bound(r.series, z, tau, digits);
    BigFloat dev = abs_val(se - nu);
    if (dev > bound) {
      rep.status = CheckReport::Status::Fail;
      std::ostringstream os;
      os << "deviation " << dev << " exceeds bound " << bound << " at (z,tau)=("
         << sp.z_re << "+" << sp.z_im << "i, " << sp.tau_re << "+" << sp.tau_im
         << "i)";
      rep.detail = os.str();
      return rep;
    }
  }
  return rep;
}

CheckReport check_s_law(long n, const std::vector<SamplePoint>& samples,
                        long digits, double tolerance_log10) {
  BigFloat::default_precision(static_cast<unsigned>(digits + 15));
  CheckReport rep;
  rep.name = "slaw(cy_fermat n=" + std::to_string(n) + ")";
  rep.region = "numeric";
  BigFloat tol = pow(BigFloat(10), BigFloat(tolerance_log10));
  BigFloat m = BigFloat(n - 2) / 2;
  for (const auto& sp : samples) {
    BigComplex z = parse_complex(sp.z_re, sp.z_im);
    BigComplex tau = parse_complex(sp.tau_re, sp.tau_im);
    BigComplex taup = BigComplex{BigFloat(-1), BigFloat(0)} / tau;
    BigComplex zp = z / tau;
    BigComplex lhs = cy_fermat_numeric(n, zp, taup, digits);
    BigComplex fac = expi2pi(BigComplex{m, BigFloat(0)} * z * z / tau);
    BigComplex rhs = fac * cy_fermat_numeric(n, z, tau, digits);
    BigFloat dev = abs_val(lhs - rhs);
    if (dev > tol) {
      rep.status = CheckReport::Status::Fail;
      std::ostringstream os;
      os << "S-law deviation " << dev << " at (z,tau)=(" << sp.z_re << "+"
         << sp.z_im << "i, " << sp.tau_re << "+" << sp.tau_im << "i)";
      rep.detail = os.str();
      return rep;
    }
  }
  return rep;
}

std::vector<CheckReport> run_campaign(const std::string& json_text) {
  json doc = json::parse(json_text);
  if (!doc.is_array())
    throw std::invalid_argument("campaign: expected a JSON array");
  std::vector<CheckReport> out;
  for (const auto& item : doc) {
    std::string check = item.at("check").get<std::string>();
    GenusOptions opt;
    opt.qmax = Rational(item.value("qmax", 2L));
    opt.ywindow = Rational(item.value("ywindow", 6L));
    if (check == "lgcy") {
      out.push_back(verify_lg_cy(item.at("n").get<long>(), opt));
    } else if (check == "weighted") {
      WeightSystem w(item.at("weights").get<std::vector<long>>(),
                     item.at("degree").get<long>());
      out.push_back(verify_weighted_lg_cy(w, opt));
    } else if (check == "hybrid") {
      HybridSpec spec{item.at("n").get<long>(), item.at("m").get<long>()};
      out.push_back(verify_hybrid(spec, opt));
    } else if (check == "jacobi") {
      out.push_back(check_jacobi(
          cy_fermat_genus(item.at("fermat").get<long>(), opt)));
    } else if (check == "window") {
      long n = item.at("fermat").get<long>();
      Rational w1(item.value("w1", n + 4L)), w2(item.value("w2", n + 8L));
      out.push_back(check_window_stability(
          "cy_fermat n=" + std::to_string(n),
          [&](const Rational& yw) {
            GenusOptions o{opt.qmax, yw};
            return cy_fermat_genus(n, o).series;
          },
          w1, w2));
    } else if (check == "numeric") {
      out.push_back(check_numeric(item.at("fermat").get<long>(), opt,
                                  default_samples(),
                                  item.value("digits", 50L)));
    } else if (check == "slaw") {
      out.push_back(check_s_law(item.at("fermat").get<long>(),
                                default_samples(),
                                item.value("digits", 120L)));
    } else {
      throw std::invalid_argument("campaign: unknown check '" + check + "'");
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     return a.name < b.name;
                   });
  return out;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(json::parse(r.to_json()));
  return arr.dump(2);
}

}  // namespace epg
