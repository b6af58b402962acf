#pragma once

#include "epg/cohring.hpp"
#include "epg/pseries.hpp"

namespace epg {

// Scalar part of a theta argument: w = zcoef*z + ashift + tshift*tau.
// ashift is canonicalized mod 1; tshift is taken literally (integer shifts
// of tshift change the value by quasi-periodicity factors).
struct ThetaArg {
  Rational zcoef, ashift, tshift;

  ThetaArg(Rational zc, Rational as, Rational ts)
      : zcoef(std::move(zc)), ashift(mod1(as)), tshift(std::move(ts)) {}
};

// q-expansion of (y_w d/dy_w)^deriv theta at w, where theta(w) =
// q^{1/8}(y_w^{1/2} - y_w^{-1/2}) prod_k (1-q^k)(1-q^k y_w)(1-q^k y_w^{-1}),
// expanded through the alternating sum
// theta(w) = sum_n (-1)^n q^{(2n+1)^2/8} y_w^{(2n+1)/2}.
// Each term lands at (eq, ey) = (s^2/2 + tshift*s, zcoef*s) with
// s = (2n+1)/2 and coefficient (-1)^n s^deriv e^{2 pi i ashift s}.
Series theta_scalar(const ThetaArg& arg, int deriv, long N,
                    const Rational& qmax, const Rational& ywindow);

// (y d/dy) theta at w = 0; equals q^{1/8} prod_k (1-q^k)^3.
Series theta_deriv0(long N, const Rational& qmax, const Rational& ywindow);

// theta(xi + w) for a nilpotent xi = sum xcoef_i x_i, as the finite Taylor
// sum over theta derivatives at the scalar argument w.
CohomSeries theta_class(const ThetaArg& arg, const std::vector<Rational>& xcoef,
                        const CohomRing& ring, long N, const Rational& qmax,
                        const Rational& ywindow);

// theta(xi + num) / theta(xi + den); both arguments share the nilpotent xi.
CohomSeries theta_ratio(const ThetaArg& num, const ThetaArg& den,
                        const std::vector<Rational>& xcoef,
                        const CohomRing& ring, long N, const Rational& qmax,
                        const Rational& ywindow);

// xi * theta(xi - z) / theta(xi), with the vanishing scalar denominator
// cancelled symbolically: theta(xi) = xi * G(xi) where
// G(xi) = sum_{k>=1} theta^{(k)}(0) xi^{k-1} / k!, a unit.
// G(xi) = sum_{k>=1} (d/dy)^k-style derivative theta(0) xi^{k-1} / k!, the
// denominator of unit_ratio; exposed so callers can pool inversions.
CohomSeries unit_g_denominator(const std::vector<Rational>& xcoef,
                               const CohomRing& ring, long N,
                               const Rational& qmax, const Rational& ywindow);

CohomSeries unit_ratio(const std::vector<Rational>& xcoef,
                       const CohomRing& ring, long N, const Rational& qmax,
                       const Rational& ywindow);

// Psi(a, b, q, xi) = theta(xi + (q-1)z + qa - qb tau) /
//                    theta(xi + qz + qa - qb tau) * y^{qb}.
CohomSeries psi(long a, long b, const Rational& qcharge,
                const std::vector<Rational>& xcoef, const CohomRing& ring,
                long N, const Rational& qmax, const Rational& ywindow);

// theta(-z) / theta'(0): the scalar factor contributed by one trivial
// tangent summand; its q^0 slice is y^{-1/2} - y^{1/2}.
Series u0_scalar(long N, const Rational& qmax, const Rational& ywindow);

}  // namespace epg
