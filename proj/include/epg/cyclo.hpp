#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "epg/rational.hpp"

namespace epg {

// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in
// zeta_N reduced modulo the N-th cyclotomic polynomial Phi_N. The
// representation is canonical: equal field elements have identical
// coefficient vectors. Rationals live at order 1.
class Cyclo {
 public:
  Cyclo() : order_(1), c_(1, Rational(0)) {}
  explicit Cyclo(const Rational& r) : order_(1), c_(1, r) { canon(); }
  explicit Cyclo(long n) : Cyclo(Rational(n)) {}

  // e^{2 pi i num/den}, expressed in Q(zeta_order). den must divide order.
  static Cyclo root_of_unity(long num, long den, long order);
  // e^{2 pi i t}; t*order must be an integer.
  static Cyclo root_of_unity(const Rational& t, long order);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return c_[0]; }

  // Embed into Q(zeta_m); order() must divide m.
  Cyclo to_order(long m) const;

  Cyclo operator-() const;
  Cyclo inv() const;

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

  // Double-precision image under zeta_N -> e^{2 pi i / N}; convenience for
  // tests. The rigorous evaluator lives in numeric.hpp.
  std::complex<double> approx() const;

  std::string str() const;

 private:
  long order_;
  std::vector<Rational> c_;  // length = totient(order_)

  void canon();
  static Cyclo from_poly(std::vector<Rational> poly, long order);
  friend std::pair<Cyclo, Cyclo> lift_pair(const Cyclo& a, const Cyclo& b);
};

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

long totient(long n);
// Coefficients of Phi_n (integer, degree totient(n)).
const std::vector<mpz_class>& cyclotomic_poly(long n);

}  // namespace epg
