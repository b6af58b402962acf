#include "epg/genus.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

namespace epg {

namespace {

using nlohmann::json;

// Least q-exponent s^2/2 + tshift*s over half-odd-integer s; the minimum
// over the real line sits at s = -tshift.
Rational theta_lead(const ThetaArg& a) {
  double beta = a.tshift.get_d();
  long n0 = (long)std::llround(-beta - 0.5);
  bool first = true;
  Rational best(0);
  for (long n = n0 - 3; n <= n0 + 3; ++n) {
    Rational s = make_rational(2 * n + 1, 2);
    Rational eq = s * s / 2 + a.tshift * s;
    if (first || eq < best) {
      best = eq;
      first = false;
    }
  }
  return best;
}

// Largest |zcoef*s| over terms with q-exponent within the budget.
Rational theta_max_absy(const ThetaArg& a, const Rational& qbudget) {
  if (a.zcoef == 0 || qbudget < theta_lead(a)) return Rational(0);
  double beta = a.tshift.get_d();
  double Q = std::max(qbudget.get_d(), 0.0);
  double root = std::sqrt(beta * beta + 2.0 * Q) + 2.0;
  long n_lo = (long)std::floor(-beta - root - 0.5) - 1;
  long n_hi = (long)std::ceil(-beta + root - 0.5) + 1;
  Rational best(0);
  for (long n = n_lo; n <= n_hi; ++n) {
    Rational s = make_rational(2 * n + 1, 2);
    if (s * s / 2 + a.tshift * s > qbudget) continue;
    Rational v = abs(a.zcoef * s);
    if (v > best) best = v;
  }
  return best;
}

// One multiplicative building block of a sector integrand.
struct FactorSpec {
  enum class Kind { Ratio, Unit, U0Inv };
  Kind kind;
  ThetaArg num, den;           // used by Ratio
  std::vector<Rational> xcoef; // used by Ratio and Unit
  Rational yphase;             // per single power
  long power = 1;

  static FactorSpec ratio(ThetaArg n, ThetaArg d, std::vector<Rational> xc,
                          Rational yp, long p = 1) {
    return {Kind::Ratio, std::move(n), std::move(d), std::move(xc),
            std::move(yp), p};
  }
  static FactorSpec unit(std::vector<Rational> xc, long p) {
    ThetaArg zero(Rational(0), Rational(0), Rational(0));
    return {Kind::Unit, zero, zero, std::move(xc), Rational(0), p};
  }
  static FactorSpec u0inv(long p = 1) {
    ThetaArg zero(Rational(0), Rational(0), Rational(0));
    return {Kind::U0Inv, zero, zero, {}, Rational(0), p};
  }
};

ThetaArg minus_z_arg() {
  return ThetaArg(Rational(-1), Rational(0), Rational(0));
}

// Effective theta arguments entering the numerator / denominator products.
ThetaArg factor_num_arg(const FactorSpec& f) {
  switch (f.kind) {
    case FactorSpec::Kind::Ratio: return f.num;
    case FactorSpec::Kind::Unit: return minus_z_arg();
    default: return ThetaArg(Rational(0), Rational(0), Rational(0));  // theta'(0)
  }
}

ThetaArg factor_den_arg(const FactorSpec& f) {
  switch (f.kind) {
    case FactorSpec::Kind::Ratio: return f.den;
    case FactorSpec::Kind::Unit:
      return ThetaArg(Rational(0), Rational(0), Rational(0));  // G(xi)
    default: return minus_z_arg();  // theta(-z)
  }
}

// Evaluate one sector: pushforward of prod(factors) over the given ring,
// exact on the requested region (qmax, ywindow). Numerators and
// denominators are accumulated separately so each sector performs a single
// series inversion; q-budgets follow from the factor leads and the
// inversion region rule, and an internally padded y-window absorbs the
// finite reach of cross terms back into the requested window.
Series eval_sector(const std::vector<FactorSpec>& fs, const CohomRing& ring,
                   long N, const Rational& qmax, const Rational& ywindow,
                   const std::string& label) {
  Rational la(0), lb(0), phase(0);
  for (const auto& f : fs) {
    la += theta_lead(factor_num_arg(f)) * f.power;
    lb += theta_lead(factor_den_arg(f)) * f.power;
    phase += f.yphase * f.power;
  }
  Rational lb_pos = lb > 0 ? lb : Rational(0);

  Rational extra(0);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Rational qa = qmax + lb_pos + extra;
    Rational qb = qmax - la + 2 * lb_pos + extra;
    Rational qi = std::max(qa, qb);

    // The inversion recursion folds y-exponents inward by up to the
    // denominator's y-spread per q-level, so the pad grows with the q
    // budget on top of the raw spread of every theta factor.
    Rational ypad = abs(phase) + 4 + 4 * qmax;
    for (const auto& f : fs) {
      ThetaArg na = factor_num_arg(f), da = factor_den_arg(f);
      ypad += theta_max_absy(na, qi - la + theta_lead(na)) * f.power;
      ypad += theta_max_absy(da, qi - lb + theta_lead(da)) * f.power;
    }
    Rational wi = ywindow + ypad;

    Series one = Series::constant(N, qi, wi, Cyclo(Rational(1)));
    CohomSeries a = CohomSeries::constant(ring, one);
    CohomSeries b = a;
    for (const auto& f : fs) {
      switch (f.kind) {
        case FactorSpec::Kind::Ratio:
          a *= theta_class(f.num, f.xcoef, ring, N, qi, wi).pow(f.power);
          b *= theta_class(f.den, f.xcoef, ring, N, qi, wi).pow(f.power);
          break;
        case FactorSpec::Kind::Unit:
          a *= theta_class(minus_z_arg(), f.xcoef, ring, N, qi, wi)
                   .pow(f.power);
          b *= unit_g_denominator(f.xcoef, ring, N, qi, wi).pow(f.power);
          break;
        case FactorSpec::Kind::U0Inv:
          a *= CohomSeries::constant(ring, theta_deriv0(N, qi, wi))
                   .pow(f.power);
          b *= CohomSeries::constant(
                   ring, theta_scalar(minus_z_arg(), 0, N, qi, wi))
                   .pow(f.power);
          break;
      }
    }
    if (a.is_zero()) return Series(N, qmax, ywindow);

    CohomSeries r;
    try {
      r = a * b.inverted();
    } catch (const std::domain_error& e) {
      throw SectorError(e.what(), label);
    }
    if (phase != 0) {
      r = r.scaled(Series::monomial(N, r.qmax(), r.ywindow(),
                                    Cyclo(Rational(1)), Rational(0), phase));
    }
    if (r.qmax() >= qmax) return r.pushforward().restricted(qmax, ywindow);
    // A cancellation raised the true denominator lead above the per-factor
    // estimate; widen the budget by the observed deficit and retry.
    extra += qmax - r.qmax();
  }
  throw std::logic_error("sector budget did not converge [" + label + "]");
}

long env_threads() {
  long hw = (long)std::thread::hardware_concurrency();
  if (hw < 1) hw = 1;
  if (const char* e = std::getenv("EPG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end != e && v >= 1) return std::min(v, hw);
  }
  return hw;
}

// Run the sector jobs on a bounded pool and sum results in sector order.
Series sum_jobs(const std::vector<std::function<Series()>>& jobs) {
  std::vector<Series> out(jobs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mx;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        out[i] = jobs[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mx);
        if (!err) err = std::current_exception();
      }
    }
  };
  size_t nt = std::min((size_t)env_threads(), jobs.size());
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
  Series acc = out.at(0);
  for (size_t i = 1; i < out.size(); ++i) acc += out[i];
  return acc;
}

std::string pair_label(size_t i, size_t j) {
  return "g=" + std::to_string(i) + ",h=" + std::to_string(j);
}

}  // namespace

std::string GenusReport::to_json() const {
  json j;
  j["formula"] = formula;
  j["params"] = params.empty() ? json::object() : json::parse(params);
  j["dimension"] = dimension;
  j["index"] = index().get_str();
  j["cy"] = cy;
  j["series"] = json::parse(series.to_json());
  return j.dump(2);
}

long genus_denominator(const WeightSystem& w, const GroupSpec& h) {
  long n = lcm_long(8, 2 * w.degree);
  for (long wi : w.weights) n = lcm_long(n, 2 * wi);
  if (!h.elements.empty()) n = lcm_long(n, 2 * h.max_char_denominator());
  return n;
}

GenusReport lg_genus(const WeightSystem& w, const GroupSpec& h,
                     const GenusOptions& opt) {
  long N = opt.denom_override ? opt.denom_override : genus_denominator(w, h);
  CohomRing scalar{{}};
  std::vector<std::function<Series()>> jobs;
  for (size_t ia = 0; ia < h.elements.size(); ++ia) {
    for (size_t ib = 0; ib < h.elements.size(); ++ib) {
      const auto &ga = h.elements[ia], &gb = h.elements[ib];
      jobs.push_back([=, &w] {
        std::vector<FactorSpec> fs;
        for (long i = 0; i < w.n(); ++i) {
          Rational q = w.charge(i);
          Rational lg = mod1(ga[i]), lh = mod1(gb[i]);
          fs.push_back(FactorSpec::ratio(ThetaArg(q - 1, lg, -lh),
                                         ThetaArg(q, lg, -lh), {}, lh));
        }
        return eval_sector(fs, scalar, N, opt.qmax, opt.ywindow,
                           pair_label(ia, ib));
      });
    }
  }
  GenusReport rep;
  rep.series =
      sum_jobs(jobs).scaled(Cyclo(make_rational(1, (long long)h.size())));
  rep.formula = "lg";
  rep.params = json{{"weights", w.weights},
                    {"degree", w.degree},
                    {"group_order", h.size()}}
                   .dump();
  rep.dimension = w.n() - 2;
  rep.cy = w.cy_flag();
  return rep;
}

Series lg_identity_sector(const WeightSystem& w, const GenusOptions& opt) {
  long N = opt.denom_override ? opt.denom_override
                              : genus_denominator(w, GroupSpec{});
  std::vector<FactorSpec> fs;
  for (long i = 0; i < w.n(); ++i) {
    Rational q = w.charge(i);
    fs.push_back(FactorSpec::ratio(ThetaArg(q - 1, Rational(0), Rational(0)),
                                   ThetaArg(q, Rational(0), Rational(0)), {},
                                   Rational(0)));
  }
  return eval_sector(fs, CohomRing{{}}, N, opt.qmax, opt.ywindow, "id,id");
}

GenusReport origin_contrib_equivariant(const WeightSystem& w,
                                       const Rational& c,
                                       const GenusOptions& opt) {
  long D = w.degree;
  long N = opt.denom_override ? opt.denom_override : 0;
  if (!N) {
    N = lcm_long(8, 2 * D);
    for (long i = 0; i < w.n(); ++i) {
      Rational zc = c * w.charge(i);
      N = lcm_long(N, 2 * (long)zc.get_den().get_si());
    }
  }
  CohomRing scalar{{}};
  std::vector<std::function<Series()>> jobs;
  for (long a = 0; a < D; ++a) {
    for (long b = 0; b < D; ++b) {
      jobs.push_back([=, &w] {
        std::vector<FactorSpec> fs;
        for (long i = 0; i < w.n(); ++i) {
          Rational q = w.charge(i);
          Rational lg = mod1(make_rational(a * w.weights[i], D));
          Rational lh = mod1(make_rational(b * w.weights[i], D));
          fs.push_back(FactorSpec::ratio(ThetaArg(c * q - 1, lg, -lh),
                                         ThetaArg(c * q, lg, -lh), {}, lh));
        }
        return eval_sector(fs, scalar, N, opt.qmax, opt.ywindow,
                           pair_label((size_t)a, (size_t)b));
      });
    }
  }
  GenusReport rep;
  rep.series = sum_jobs(jobs).scaled(Cyclo(make_rational(1, D)));
  rep.formula = "origin";
  rep.params = json{{"weights", w.weights},
                    {"degree", w.degree},
                    {"c", c.get_str()}}
                   .dump();
  rep.dimension = w.n() - 2;
  rep.cy = w.cy_flag();
  return rep;
}

GenusReport cy_fermat_genus(long n, const GenusOptions& opt) {
  long N = opt.denom_override ? opt.denom_override : 8;
  CohomRing ring{{n}};
  ThetaArg zero(Rational(0), Rational(0), Rational(0));
  std::vector<FactorSpec> fs;
  fs.push_back(FactorSpec::unit({Rational(1)}, n));
  fs.push_back(FactorSpec::ratio(zero, minus_z_arg(), {Rational(n)},
                                 Rational(0)));
  fs.push_back(FactorSpec::u0inv());
  GenusReport rep;
  rep.series = eval_sector(fs, ring, N, opt.qmax, opt.ywindow, "fermat");
  rep.formula = "cy_fermat";
  rep.params = json{{"n", n}}.dump();
  rep.dimension = n - 2;
  rep.cy = true;
  return rep;
}

GenusReport weighted_cy_genus(const WeightSystem& w, const GenusOptions& opt) {
  long n = w.n(), D = w.degree;
  GroupSpec gamma = GroupSpec::product_mu(w.weights);
  long N = opt.denom_override ? opt.denom_override : genus_denominator(w, gamma);

  // Untwisted sector over the weighted projective stack: the stack tangent
  // sits in the Euler sequence with summands O(w_i), so the class pulled
  // back to the degree-(prod w_i) cover is prod U(w_i x)/U(0) times the
  // O(D) hypersurface factor. The twisted sectors live only on the stacky
  // strata (coordinates whose weights share a common divisor m >= 2); their
  // inertia characters are multiples of 1/m, and whenever w_i | D the O(D)
  // numerator degenerates to theta(0) = 0, so for Fermat-type weight
  // systems they vanish identically.
  long M = 1;
  for (long wi : w.weights) M = lcm_long(M, wi);
  std::vector<std::function<Series()>> jobs;
  for (long j1 = 0; j1 < M; ++j1) {
    for (long j2 = 0; j2 < M; ++j2) {
      // fixed coordinates of the pair (e^{2 pi i j1/M}, e^{2 pi i j2/M})
      std::vector<long> fixed, moving;
      for (long i = 0; i < n; ++i) {
        bool fix = (j1 * w.weights[i]) % M == 0 && (j2 * w.weights[i]) % M == 0;
        (fix ? fixed : moving).push_back(i);
      }
      if (fixed.empty()) continue;
      jobs.push_back([=, &w] {
        Rational c1 = make_rational(j1, M), c2 = make_rational(j2, M);
        CohomRing ring{{(long)fixed.size()}};
        std::vector<FactorSpec> fs;
        for (long i : fixed)
          fs.push_back(FactorSpec::unit({Rational(w.weights[i])}, 1));
        fs.push_back(FactorSpec::u0inv());
        for (long k : moving) {
          Rational lg = mod1(c1 * w.weights[k]), lh = mod1(c2 * w.weights[k]);
          fs.push_back(FactorSpec::ratio(ThetaArg(Rational(-1), lg, -lh),
                                         ThetaArg(Rational(0), lg, -lh),
                                         {Rational(w.weights[k])}, lh));
        }
        Rational dg = mod1(c1 * D), dh = mod1(c2 * D);
        fs.push_back(FactorSpec::ratio(ThetaArg(Rational(0), dg, -dh),
                                       ThetaArg(Rational(-1), dg, -dh),
                                       {Rational(D)}, -dh));
        Series s = eval_sector(fs, ring, N, opt.qmax, opt.ywindow,
                               pair_label((size_t)j1, (size_t)j2));
        long long cover = 1;
        for (long i : fixed) cover *= w.weights[i];
        return s.scaled(Cyclo(make_rational(1, cover)));
      });
    }
  }
  GenusReport rep;
  rep.series = sum_jobs(jobs);
  rep.formula = "weighted_cy";
  rep.params = json{{"weights", w.weights}, {"degree", w.degree}}.dump();
  rep.dimension = n - 2;
  rep.cy = w.cy_flag();
  return rep;
}

GenusReport hybrid_genus(const HybridSpec& spec, HybridPhase phase,
                         const GenusOptions& opt) {
  long n = spec.n, m = spec.m;
  long N = opt.denom_override
               ? opt.denom_override
               : lcm_long(lcm_long(8, 2 * n), 2 * m);
  GenusReport rep;
  rep.dimension = n + m - 3;
  rep.cy = true;
  rep.params = json{{"n", n}, {"m", m}}.dump();

  if (phase == HybridPhase::H3) {
    CohomRing ring{{n, m}};
    std::vector<FactorSpec> fs;
    fs.push_back(FactorSpec::unit({Rational(1), Rational(0)}, n));
    fs.push_back(FactorSpec::unit({Rational(0), Rational(1)}, m));
    fs.push_back(FactorSpec::ratio(
        ThetaArg(Rational(0), Rational(0), Rational(0)), minus_z_arg(),
        {Rational(n), Rational(m)}, Rational(0)));
    fs.push_back(FactorSpec::u0inv(2));
    rep.series = eval_sector(fs, ring, N, opt.qmax, opt.ywindow, "bidegree");
    rep.formula = "hybrid_h3";
    return rep;
  }

  // H1 fibers over P^{m-1} with an order-n orbifold sum; H2 swaps roles.
  // Each fiber coordinate carries degree -base/fib (the orbifold n-th root
  // twist): that is the unique degree making the phase Calabi-Yau, since
  // det of the fiber bundle must cancel K of the projective base.
  long fib = phase == HybridPhase::H1 ? n : m;
  long base = phase == HybridPhase::H1 ? m : n;
  CohomRing ring{{base}};
  std::vector<std::function<Series()>> jobs;
  for (long a = 0; a < fib; ++a) {
    for (long b = 0; b < fib; ++b) {
      jobs.push_back([=] {
        Rational qf = make_rational(1, fib);
        Rational lg = make_rational(a, fib), lh = make_rational(b, fib);
        std::vector<FactorSpec> fs;
        fs.push_back(FactorSpec::ratio(ThetaArg(qf - 1, lg, -lh),
                                       ThetaArg(qf, lg, -lh),
                                       {make_rational(-base, fib)}, lh, fib));
        fs.push_back(FactorSpec::unit({Rational(1)}, base));
        fs.push_back(FactorSpec::u0inv());
        return eval_sector(fs, ring, N, opt.qmax, opt.ywindow,
                           pair_label((size_t)a, (size_t)b));
      });
    }
  }
  rep.series = sum_jobs(jobs).scaled(Cyclo(make_rational(1, fib)));
  rep.formula = phase == HybridPhase::H1 ? "hybrid_h1" : "hybrid_h2";
  return rep;
}

}  // namespace epg
