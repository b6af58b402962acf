#pragma once

#include <map>
#include <string>
#include <vector>

#include "epg/pseries.hpp"

namespace epg {

// Truncated polynomial ring K[x_1,...,x_r]/(x_i^{m_i}), modeling
// H*(P^{m_1-1} x ... x P^{m_r-1}) with K the series ring.
struct CohomRing {
  std::vector<long> trunc;  // m_i: x_i^{m_i} = 0

  size_t ngens() const { return trunc.size(); }
  long nilpotency_degree() const {
    long d = 0;
    for (long m : trunc) d += m - 1;
    return d;
  }
  bool operator==(const CohomRing& o) const { return trunc == o.trunc; }
};

// Element of the truncated ring with Series coefficients. The truncation
// region (qmax, ywindow) applies uniformly to every coefficient.
class CohomSeries {
 public:
  using Key = std::vector<int>;  // generator exponents, size = ngens

  CohomSeries() = default;
  CohomSeries(CohomRing ring, long denom, const Rational& qmax,
              const Rational& ywindow);

  static CohomSeries constant(const CohomRing& ring, const Series& s);
  // c * x_1^{k_1} ... x_r^{k_r}
  static CohomSeries monomial(const CohomRing& ring, const Key& k,
                              const Series& s);

  const CohomRing& ring() const { return ring_; }
  long denom() const { return denom_; }
  // Honest region: the minimum over the stored coefficients' own regions
  // (coefficients keep per-key regions, which series products sharpen or
  // shrink independently).
  Rational qmax() const;
  Rational ywindow() const;
  bool is_zero() const { return c_.empty(); }

  // Coefficient of the given generator-exponent key (zero series if absent).
  Series coeff(const Key& k) const;
  void add(const Key& k, const Series& s);

  CohomSeries operator-() const;
  friend CohomSeries operator+(const CohomSeries& a, const CohomSeries& b);
  friend CohomSeries operator-(const CohomSeries& a, const CohomSeries& b);
  friend CohomSeries operator*(const CohomSeries& a, const CohomSeries& b);
  CohomSeries& operator+=(const CohomSeries& b) { return *this = *this + b; }
  CohomSeries& operator*=(const CohomSeries& b) { return *this = *this * b; }

  CohomSeries scaled(const Series& s) const;
  CohomSeries pow(long e) const;

  // Multiplicative inverse: the x^0 part must pass the series inversion
  // guard; the nilpotent remainder is handled by a finite geometric sum.
  CohomSeries inverted() const;

  // Fundamental-class evaluation: the coefficient of the top monomial
  // prod x_i^{m_i - 1}.
  Series pushforward() const;

  template <typename F>
  void for_each(F&& f) const {  // f(const Key&, const Series&)
    for (const auto& [k, s] : c_) f(k, s);
  }

 private:
  CohomRing ring_;
  long denom_ = 1;
  Rational qmax_, ywindow_;
  std::map<Key, Series> c_;

  bool key_ok(const Key& k) const;
  void insert(const Key& k, const Series& s);
};

// One connected component of the (g,h) fixed locus of a coordinatewise
// action on P^{n-1}: the coordinates sharing a common character pair.
struct FixedLocus {
  std::vector<int> coords;            // subset of {0..n-1}
  std::pair<Rational, Rational> charpair;  // (theta(g), theta(h)) mod 1
  long dim() const { return (long)coords.size() - 1; }
};

// Tangent datum from the Euler-sequence model: n line-bundle roots, each
// the locus hyperplane class twisted by theta_i - theta_J, with one
// distinguished trivial summand flagged for removal downstream.
struct ChernRoot {
  Rational char_g, char_h;  // mod 1
  bool flagged_trivial = false;
};

// Partition {0..n-1} by the character pair (theta_i(g), theta_i(h)) mod 1.
std::vector<FixedLocus> fixed_loci(long n, const std::vector<Rational>& g,
                                   const std::vector<Rational>& h);

std::vector<ChernRoot> tangent_chern_roots(const FixedLocus& locus, long n,
                                           const std::vector<Rational>& g,
                                           const std::vector<Rational>& h);

}  // namespace epg
