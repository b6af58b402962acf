#include "epg/numeric.hpp"

#include <stdexcept>

namespace epg {

namespace {

void set_precision(long digits) {
  BigFloat::default_precision(static_cast<unsigned>(digits + 15));
}

BigFloat pi_val() {
  static thread_local BigFloat cached(0);
  static thread_local unsigned cached_prec = 0;
  if (cached_prec != BigFloat::default_precision()) {
    cached = 4 * atan(BigFloat(1));
    cached_prec = BigFloat::default_precision();
  }
  return cached;
}

BigFloat rational_val(const Rational& r) {
  return BigFloat(r.get_num().get_str()) / BigFloat(r.get_den().get_str());
}

}  // namespace

BigFloat abs_val(const BigComplex& a) {
  return sqrt(a.re * a.re + a.im * a.im);
}

BigComplex expi2pi(const BigComplex& w) {
  BigFloat ang = 2 * pi_val() * w.re;
  BigFloat mag = exp(-2 * pi_val() * w.im);
  return {mag * cos(ang), mag * sin(ang)};
}

BigComplex theta_numeric(const BigComplex& z, const BigComplex& tau,
                         long digits) {
  set_precision(digits);
  if (tau.im <= 0) throw std::domain_error("theta_numeric: Im tau <= 0");
  BigComplex q = expi2pi(tau);
  BigComplex y = expi2pi(z);
  BigComplex yh = expi2pi({z.re / 2, z.im / 2});
  BigComplex q8 = expi2pi({tau.re / 8, tau.im / 8});
  BigComplex acc = q8 * (yh - BigComplex(1) / yh);

  BigFloat absq = abs_val(q);
  BigFloat absy = abs_val(y);
  BigFloat ymax = absy > 1 ? absy : 1 / absy;
  BigFloat eps = pow(BigFloat(10), -(digits + 10));
  BigComplex qk(1);
  for (long k = 1;; ++k) {
    qk *= q;
    acc = acc * (BigComplex(1) - qk) * (BigComplex(1) - qk * y) *
          (BigComplex(1) - qk / y);
    // remaining log-factors are bounded by 3 ymax |q|^{k+1} / (1-|q|)
    BigFloat tail = 3 * ymax * pow(absq, k + 1) / (1 - absq);
    if (tail < eps) break;
    if (k > 100000) throw std::domain_error("theta_numeric: no convergence");
  }
  return acc;
}

BigComplex theta_deriv0_numeric(const BigComplex& tau, long digits) {
  set_precision(digits);
  BigComplex q = expi2pi(tau);
  BigComplex q8 = expi2pi({tau.re / 8, tau.im / 8});
  BigFloat absq = abs_val(q);
  BigFloat eps = pow(BigFloat(10), -(digits + 10));
  BigComplex acc = q8;
  BigComplex qk(1);
  for (long k = 1;; ++k) {
    qk *= q;
    BigComplex f = BigComplex(1) - qk;
    acc = acc * f * f * f;
    if (3 * pow(absq, k + 1) / (1 - absq) < eps) break;
  }
  return BigComplex(BigFloat(0), 2 * pi_val()) * acc;
}

BigComplex cyclo_eval(const Cyclo& c, long digits) {
  set_precision(digits);
  BigComplex acc;
  const auto& v = c.coeffs();
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    BigComplex root = expi2pi({rational_val(make_rational(j, c.order())),
                               BigFloat(0)});
    acc += root * BigComplex{rational_val(v[j]), BigFloat(0)};
  }
  return acc;
}

BigComplex series_eval(const Series& s, const BigComplex& z,
                       const BigComplex& tau, long digits) {
  set_precision(digits);
  BigComplex acc;
  s.for_each([&](const Rational& eq, const Rational& ey, const Cyclo& c) {
    BigFloat a = rational_val(eq), b = rational_val(ey);
    BigComplex w{a * tau.re + b * z.re, a * tau.im + b * z.im};
    acc += cyclo_eval(c, digits) * expi2pi(w);
  });
  return acc;
}

BigFloat series_tail_bound(const Series& s, const BigComplex& z,
                           const BigComplex& tau, long digits) {
  set_precision(digits);
  BigFloat absq = abs_val(expi2pi(tau));
  BigFloat absy = abs_val(expi2pi(z));
  BigFloat ymax = absy > 1 ? absy : 1 / absy;

  // Weighted magnitude of each stored q-slice at the sample point.
  std::map<Rational, BigFloat> slice;
  s.for_each([&](const Rational& eq, const Rational& ey, const Cyclo& c) {
    BigFloat m = abs_val(cyclo_eval(c, digits)) *
                 pow(ymax, abs(rational_val(ey)));
    auto [it, fresh] = slice.emplace(eq, m);
    if (!fresh) it->second += m;
  });
  if (slice.empty()) return pow(BigFloat(10), -digits);

  // Extrapolate the slice sums geometrically past qmax. gap is the
  // smallest observed slice spacing (at least the lattice step).
  BigFloat smax(0), growth(1);
  Rational gap = s.qmax() - slice.begin()->first;
  if (gap <= 0) gap = make_rational(1, s.denom());
  const BigFloat* prev = nullptr;
  const Rational* prevq = nullptr;
  for (const auto& [eq, m] : slice) {
    if (m > smax) smax = m;
    if (prev && *prev > 0) {
      BigFloat g = m / *prev;
      if (g > growth) growth = g;
      Rational d = eq - *prevq;
      if (d > 0 && d < gap) gap = d;
    }
    prev = &m;
    prevq = &eq;
  }
  Rational first_missing = s.qmax() + gap;
  BigFloat step = growth * pow(absq, rational_val(gap));
  if (step >= BigFloat(0.5))
    throw std::domain_error("series_tail_bound: |q| too large for the "
                            "observed coefficient growth");
  BigFloat tail = smax * growth *
                  pow(absq, rational_val(first_missing)) /
                  (1 - step);
  return 10 * tail + pow(BigFloat(10), -digits);
}

BigComplex cy_fermat_numeric(long n, const BigComplex& z,
                             const BigComplex& tau, long digits,
                             long msamples, double radius) {
  set_precision(digits);
  if (n < 2) throw std::domain_error("cy_fermat_numeric: n < 2");
  double zmod = static_cast<double>(abs_val(z));
  double r = radius > 0 ? radius : 0.25 * zmod / static_cast<double>(n);
  BigComplex scale =
      theta_deriv0_numeric(tau, digits) / theta_numeric(-z, tau, digits);

  BigComplex acc;
  for (long j = 0; j < msamples; ++j) {
    BigComplex eps =
        BigComplex{BigFloat(r), BigFloat(0)} *
        expi2pi({rational_val(make_rational(j, msamples)), BigFloat(0)});
    BigComplex unit = eps * theta_numeric(eps - z, tau, digits) /
                      theta_numeric(eps, tau, digits);
    BigComplex f(1);
    for (long i = 0; i < n; ++i) f *= unit;
    BigComplex ne{n * eps.re, n * eps.im};
    f *= theta_numeric(ne, tau, digits) / theta_numeric(ne - z, tau, digits);
    // divide by eps^{n-1}
    BigComplex epspow(1);
    for (long i = 0; i + 1 < n; ++i) epspow *= eps;
    acc += f / epspow;
  }
  return acc * scale / BigComplex(msamples);
}

}  // namespace epg
