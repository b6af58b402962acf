#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace epg {

using Rational = mpq_class;

// Fractional part in [0,1).
inline Rational mod1(const Rational& r) {
  mpz_class num = r.get_num(), den = r.get_den();
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational out = r - Rational(q);
  out.canonicalize();
  return out;
}

inline long lcm_long(long a, long b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
  return std::lcm(a, b);
}

// r * scale must be an integer; returns it as long.
inline long long scale_exact(const Rational& r, long scale) {
  Rational s = r * scale;
  s.canonicalize();
  if (s.get_den() != 1)
    throw std::invalid_argument("exponent " + r.get_str() +
                                " not on 1/" + std::to_string(scale) + " lattice");
  if (!s.get_num().fits_slong_p()) throw std::overflow_error("scaled exponent overflow");
  return s.get_num().get_si();
}

// num/den as a canonical rational; accepts 64-bit scaled lattice values.
inline Rational make_rational(long long num, long long den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace epg
