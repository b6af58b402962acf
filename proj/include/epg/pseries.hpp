#pragma once

#include <map>
#include <optional>
#include <string>

#include "epg/cyclo.hpp"
#include "epg/rational.hpp"

namespace epg {

// Sparse bivariate Puiseux-Laurent series in q = e^{2 pi i tau} and
// y = e^{2 pi i z}, exponents on the (1/denom)Z lattice, coefficients in
// Q(zeta_denom). Truncated to eq <= qmax and |ey| <= ywindow; truncation
// bounds propagate pessimistically (min of operands).
class Series {
 public:
  Series() : denom_(1), qmax_s_(0), ywin_s_(0) {}
  Series(long denom, const Rational& qmax, const Rational& ywindow);

  long denom() const { return denom_; }
  Rational qmax() const { return make_rational(qmax_s_, denom_); }
  Rational ywindow() const { return make_rational(ywin_s_, denom_); }
  long long qmax_scaled() const { return qmax_s_; }
  long long ywin_scaled() const { return ywin_s_; }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const;

  // Stored coefficient (zero if absent or outside region).
  Cyclo coeff(const Rational& eq, const Rational& ey) const;
  void add_term(const Rational& eq, const Rational& ey, const Cyclo& c);

  static Series constant(long denom, const Rational& qmax, const Rational& yw,
                         const Cyclo& c);
  static Series monomial(long denom, const Rational& qmax, const Rational& yw,
                         const Cyclo& c, const Rational& eq, const Rational& ey);

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }

  Series scaled(const Cyclo& c) const;
  // Multiply by the monomial c * q^eq * y^ey. The trusted region shifts
  // with the terms: qmax moves by eq, the y window narrows by |ey|.
  Series mul_monomial(const Cyclo& c, const Rational& eq, const Rational& ey) const;

  // Multiplicative inverse up to truncation. The minimal-q slice must be
  // expandable per the q-adic-then-|y|<1 direction rule; a zero series
  // raises a singular-leading-term error.
  Series inverted() const;

  // z -> z + t (phase e^{2 pi i t ey} per term) combined with z -> z + r*tau
  // (y -> y q^r). qmax tightens by |r| * ywindow.
  Series subst_y_scale(const Rational& phase, const Rational& r) const;
  // tau -> tau + 1: coefficient at (eq, ey) multiplied by e^{2 pi i eq}.
  Series subst_q_phase() const;
  // q -> 0 slice; errors if negative q-exponents are present.
  Series q_limit() const;

  Rational min_q_exponent() const;  // requires nonzero
  // Largest |ey| carrying a nonzero coefficient (0 for the zero series).
  Rational max_abs_y_exponent() const;

  // Evaluate at y = 1 the eq = 0 slice would be done by caller via iteration.
  template <typename F>
  void for_each(F&& f) const {  // f(Rational eq, Rational ey, const Cyclo&)
    for (const auto& [qs, yp] : t_)
      for (const auto& [ys, c] : yp)
        f(make_rational(qs, denom_), make_rational(ys, denom_), c);
  }

  // Lift to a finer lattice; denom() must divide nd.
  Series lift_denom(long nd) const;

  // Restrict stated truncation bounds (drops terms outside).
  Series restricted(const Rational& qmax, const Rational& ywindow) const;

  std::string to_json() const;
  static Series from_json(const std::string& text);

  struct Mismatch {
    bool equal = true;
    bool empty_region = false;
    Rational eq, ey;
    Cyclo lhs, rhs;
    std::string describe() const;
  };
  // Compare on the intersection of truncation regions; on failure reports
  // the lexicographically smallest mismatching exponent pair.
  static Mismatch compare(const Series& a, const Series& b);

 private:
  long denom_;
  long long qmax_s_, ywin_s_;  // scaled by denom_
  // q-slice -> (y exponent -> coefficient); exponents scaled by denom_.
  std::map<long long, std::map<long long, Cyclo>> t_;

  void insert(long long qs, long long ys, const Cyclo& c);
  bool in_region(long long qs, long long ys) const {
    return qs <= qmax_s_ && ys <= ywin_s_ && ys >= -ywin_s_;
  }
  friend class SeriesBuilder;
};

}  // namespace epg
