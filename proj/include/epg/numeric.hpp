#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "epg/pseries.hpp"

namespace epg {

// Arbitrary-precision complex arithmetic on MPFR reals. Precision is the
// thread-local Boost default; public entry points below set it from their
// digits argument before computing.
using BigFloat = boost::multiprecision::mpfr_float;

struct BigComplex {
  BigFloat re, im;

  BigComplex() : re(0), im(0) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(long r) : re(r), im(0) {}

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  BigComplex operator-() const { return {-re, -im}; }
  BigComplex& operator+=(const BigComplex& b) { return *this = *this + b; }
  BigComplex& operator*=(const BigComplex& b) { return *this = *this * b; }
};

BigFloat abs_val(const BigComplex& a);
// e^{2 pi i w}
BigComplex expi2pi(const BigComplex& w);

// Odd Jacobi theta q^{1/8}(y^{1/2}-y^{-1/2}) prod (1-q^k)(1-q^k y)(1-q^k/y)
// via the product formula, truncated once the factor bound drops below the
// working precision. Requires Im tau > 0.
BigComplex theta_numeric(const BigComplex& z, const BigComplex& tau,
                         long digits);
// d theta / dz at z = 0: 2 pi i q^{1/8} prod (1-q^k)^3.
BigComplex theta_deriv0_numeric(const BigComplex& tau, long digits);

// Image of a cyclotomic number under zeta_N -> e^{2 pi i / N}.
BigComplex cyclo_eval(const Cyclo& c, long digits);

// Value of the truncated series at q = e^{2 pi i tau}, y = e^{2 pi i z}.
BigComplex series_eval(const Series& s, const BigComplex& z,
                       const BigComplex& tau, long digits);
// A priori bound on the discarded tail, from the per-slice coefficient
// growth of the stored terms and |q|, |y| at the sample point.
BigFloat series_tail_bound(const Series& s, const BigComplex& z,
                           const BigComplex& tau, long digits);

// Independent numeric value of the degree-n Fermat genus: the x^{n-1}
// coefficient of (x theta(x-z)/theta(x))^n theta(nx)/theta(nx-z) times
// theta'(0)/theta(-z), extracted by an M-point contour of radius r around
// x = 0. r must stay below |z|/n (the nearest denominator zero).
BigComplex cy_fermat_numeric(long n, const BigComplex& z,
                             const BigComplex& tau, long digits,
                             long msamples = 256, double radius = 0.0);

}  // namespace epg
