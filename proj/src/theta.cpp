#include "epg/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace epg {

Series theta_scalar(const ThetaArg& arg, int deriv, long N,
                    const Rational& qmax, const Rational& ywindow) {
  Series out(N, qmax, ywindow);
  // eq(s) = s^2/2 + tshift*s <= qmax bounds s to a finite interval.
  double beta = arg.tshift.get_d();
  double Q = qmax.get_d();
  double disc = beta * beta + 2.0 * std::max(Q, 0.0);
  if (disc < 0) return out;
  double root = std::sqrt(disc) + 2.0;  // margin; exact filter below
  long n_lo = (long)std::floor((-beta - root - 0.5) - 1);
  long n_hi = (long)std::ceil((-beta + root - 0.5) + 1);
  for (long n = n_lo; n <= n_hi; ++n) {
    Rational s(2 * n + 1, 2);
    Rational eq = s * s / 2 + arg.tshift * s;
    if (eq > qmax) continue;
    Rational ey = arg.zcoef * s;
    if (abs(ey) > ywindow) continue;
    Rational mag(1);
    for (int k = 0; k < deriv; ++k) mag *= s;
    if ((n % 2 + 2) % 2 == 1) mag = -mag;
    Cyclo c = Cyclo::root_of_unity(mod1(arg.ashift * s), N) * Cyclo(mag);
    out.add_term(eq, ey, c);
  }
  return out;
}

Series theta_deriv0(long N, const Rational& qmax, const Rational& ywindow) {
  return theta_scalar(ThetaArg(Rational(0), Rational(0), Rational(0)), 1, N,
                      qmax, ywindow);
}

namespace {

CohomSeries xi_class(const std::vector<Rational>& xcoef, const CohomRing& ring,
                     long N, const Rational& qmax, const Rational& ywindow) {
  if (xcoef.size() != ring.ngens())
    throw std::invalid_argument("xi coefficient count != ring generators");
  CohomSeries xi(ring, N, qmax, ywindow);
  for (size_t i = 0; i < xcoef.size(); ++i) {
    if (xcoef[i] == 0 || ring.trunc[i] < 2) continue;  // x_i = 0 in the ring
    CohomSeries::Key k(ring.ngens(), 0);
    k[i] = 1;
    xi.add(k, Series::constant(N, qmax, ywindow, Cyclo(xcoef[i])));
  }
  return xi;
}

}  // namespace

CohomSeries theta_class(const ThetaArg& arg, const std::vector<Rational>& xcoef,
                        const CohomRing& ring, long N, const Rational& qmax,
                        const Rational& ywindow) {
  CohomSeries xi = xi_class(xcoef, ring, N, qmax, ywindow);
  CohomSeries out =
      CohomSeries::constant(ring, theta_scalar(arg, 0, N, qmax, ywindow));
  CohomSeries xpow = CohomSeries::constant(
      ring, Series::constant(N, qmax, ywindow, Cyclo(Rational(1))));
  Rational kfact(1);
  for (long k = 1; k <= ring.nilpotency_degree(); ++k) {
    xpow *= xi;
    if (xpow.is_zero()) break;
    kfact *= k;
    Series d = theta_scalar(arg, (int)k, N, qmax, ywindow)
                   .scaled(Cyclo(Rational(1) / kfact));
    out += xpow.scaled(d);
  }
  return out;
}

CohomSeries theta_ratio(const ThetaArg& num, const ThetaArg& den,
                        const std::vector<Rational>& xcoef,
                        const CohomRing& ring, long N, const Rational& qmax,
                        const Rational& ywindow) {
  return theta_class(num, xcoef, ring, N, qmax, ywindow) *
         theta_class(den, xcoef, ring, N, qmax, ywindow).inverted();
}

CohomSeries unit_g_denominator(const std::vector<Rational>& xcoef,
                               const CohomRing& ring, long N,
                               const Rational& qmax, const Rational& ywindow) {
  CohomSeries xi = xi_class(xcoef, ring, N, qmax, ywindow);
  ThetaArg origin(Rational(0), Rational(0), Rational(0));
  CohomSeries g =
      CohomSeries::constant(ring, theta_scalar(origin, 1, N, qmax, ywindow));
  CohomSeries xpow = CohomSeries::constant(
      ring, Series::constant(N, qmax, ywindow, Cyclo(Rational(1))));
  Rational kfact(1);
  for (long k = 2; k <= ring.nilpotency_degree() + 1; ++k) {
    xpow *= xi;
    if (xpow.is_zero()) break;
    kfact *= k;
    Series d = theta_scalar(origin, (int)k, N, qmax, ywindow)
                   .scaled(Cyclo(Rational(1) / kfact));
    g += xpow.scaled(d);
  }
  return g;
}

CohomSeries unit_ratio(const std::vector<Rational>& xcoef,
                       const CohomRing& ring, long N, const Rational& qmax,
                       const Rational& ywindow) {
  CohomSeries num = theta_class(ThetaArg(Rational(-1), Rational(0), Rational(0)),
                                xcoef, ring, N, qmax, ywindow);
  return num * unit_g_denominator(xcoef, ring, N, qmax, ywindow).inverted();
}

CohomSeries psi(long a, long b, const Rational& qcharge,
                const std::vector<Rational>& xcoef, const CohomRing& ring,
                long N, const Rational& qmax, const Rational& ywindow) {
  Rational qa = qcharge * a, qb = qcharge * b;
  ThetaArg num(qcharge - 1, qa, -qb);
  ThetaArg den(qcharge, qa, -qb);
  CohomSeries r = theta_ratio(num, den, xcoef, ring, N, qmax, ywindow);
  Series phase = Series::monomial(N, r.qmax(), r.ywindow(), Cyclo(Rational(1)),
                                  Rational(0), qb);
  return r.scaled(phase);
}

Series u0_scalar(long N, const Rational& qmax, const Rational& ywindow) {
  Series num = theta_scalar(ThetaArg(Rational(-1), Rational(0), Rational(0)), 0,
                            N, qmax, ywindow);
  return num * theta_deriv0(N, qmax, ywindow).inverted();
}

}  // namespace epg
