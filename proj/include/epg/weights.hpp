#pragma once

#include <vector>

#include "epg/rational.hpp"

namespace epg {

// Quasi-homogeneous weight system: weights w_i of degree D, charges
// q_i = w_i / D. The Calabi-Yau condition is sum w_i = D.
struct WeightSystem {
  std::vector<long> weights;
  long degree = 0;

  WeightSystem(std::vector<long> w, long d);

  long n() const { return (long)weights.size(); }
  Rational charge(long i) const { return make_rational(weights[i], degree); }
  bool cy_flag() const;
  // Character vector of the exponential grading operator J_W.
  std::vector<Rational> j_w() const;
};

// Finite abelian group acting coordinatewise, with every element stored as
// its character vector (theta_1, ..., theta_n) in (Q/Z)^n.
struct GroupSpec {
  std::vector<std::vector<Rational>> elements;

  size_t size() const { return elements.size(); }
  // Cyclic group generated by one character vector.
  static GroupSpec cyclic(const std::vector<Rational>& gen);
  // Product mu_{w_1} x ... x mu_{w_n} acting diagonally by coordinates.
  static GroupSpec product_mu(const std::vector<long>& w);
  // Least common multiple of the orders of all characters.
  long max_char_denominator() const;
};

// The two block sizes of a hybrid phase (base P^{m-1} or P^{n-1}).
struct HybridSpec {
  long n = 2, m = 2;
};

}  // namespace epg
