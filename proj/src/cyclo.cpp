#include "epg/cyclo.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace epg {

long totient(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, index = degree

ZPoly zpoly_one() { return {mpz_class(1)}; }

// Exact division of integer polynomials, remainder must vanish.
ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (r.size() < b.size()) throw std::logic_error("zpoly_div_exact degree");
  ZPoly q(r.size() - b.size() + 1, mpz_class(0));
  for (long i = (long)q.size() - 1; i >= 0; --i) {
    mpz_class c = r[i + b.size() - 1] / b.back();
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
  }
  for (const auto& c : r)
    if (c != 0) throw std::logic_error("zpoly_div_exact remainder");
  return q;
}

ZPoly compute_cyclotomic(long n);

std::map<long, ZPoly>& cyclo_cache() {
  static std::map<long, ZPoly> cache;
  return cache;
}
std::mutex cyclo_mutex;

ZPoly compute_cyclotomic(long n) {
  if (n == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
  // (x^n - 1) / prod_{d | n, d < n} Phi_d
  ZPoly num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = zpoly_div_exact(num, cyclotomic_poly(d));
  }
  return num;
}

// Per-order context: Phi_N plus rows x^k mod Phi_N for k up to the largest
// degree a product of two reduced elements can reach.
struct CycloCtx {
  long n;
  long deg;                       // totient(n)
  std::vector<std::vector<mpz_class>> rows;  // rows[k - deg] = x^k mod Phi, k in [deg, rowmax]
  long rowmax;
};

const CycloCtx& ctx_for(long n) {
  static std::map<long, CycloCtx> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CycloCtx c;
  c.n = n;
  const ZPoly& phi = cyclotomic_poly(n);
  c.deg = (long)phi.size() - 1;
  c.rowmax = std::max(2 * c.deg - 2, n - 1);
  // iteratively: row(k+1) = shift of row(k) reduced once
  std::vector<mpz_class> cur(c.deg, mpz_class(0));
  // x^deg mod Phi = -(phi[0..deg-1]) since Phi monic
  for (long i = 0; i < c.deg; ++i) cur[i] = -phi[i];
  for (long k = c.deg; k <= c.rowmax; ++k) {
    c.rows.push_back(cur);
    // multiply by x, reduce
    std::vector<mpz_class> nxt(c.deg, mpz_class(0));
    mpz_class top = cur[c.deg - 1];
    for (long i = c.deg - 1; i > 0; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0)
      for (long i = 0; i < c.deg; ++i) nxt[i] -= top * phi[i];
    cur = std::move(nxt);
  }
  auto [pos, ok] = cache.emplace(n, std::move(c));
  return pos->second;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(long n) {
  {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_cache().find(n);
    if (it != cyclo_cache().end()) return it->second;
  }
  ZPoly p = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  auto [it, ok] = cyclo_cache().emplace(n, std::move(p));
  return it->second;
}

void Cyclo::canon() {
  for (auto& r : c_) r.canonicalize();
  // Collapse to order 1 when the element is rational and stored at a
  // larger order; keeps equality and storage canonical.
  if (order_ > 1) {
    bool rat = true;
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) { rat = false; break; }
    if (rat) {
      Rational r0 = c_[0];
      order_ = 1;
      c_.assign(1, r0);
    }
  }
}

Cyclo Cyclo::from_poly(std::vector<Rational> poly, long order) {
  const CycloCtx& ctx = ctx_for(order);
  Cyclo out;
  out.order_ = order;
  out.c_.assign(ctx.deg, Rational(0));
  for (long k = 0; k < (long)poly.size(); ++k) {
    if (poly[k] == 0) continue;
    if (k < ctx.deg) {
      out.c_[k] += poly[k];
    } else {
      if (k > ctx.rowmax) throw std::logic_error("cyclo reduction degree");
      const auto& row = ctx.rows[k - ctx.deg];
      for (long i = 0; i < ctx.deg; ++i)
        if (row[i] != 0) out.c_[i] += poly[k] * Rational(row[i]);
    }
  }
  out.canon();
  return out;
}

Cyclo Cyclo::root_of_unity(long num, long den, long order) {
  if (den <= 0) throw std::invalid_argument("root_of_unity: nonpositive den");
  if (order % den != 0)
    throw std::invalid_argument("root_of_unity: order mismatch (den " +
                                std::to_string(den) + " does not divide " +
                                std::to_string(order) + ")");
  long k = ((num % den) + den) % den;
  long e = k * (order / den);
  if (e == 0) return Cyclo(Rational(1));
  std::vector<Rational> poly(e + 1, Rational(0));
  poly[e] = 1;
  return from_poly(std::move(poly), order);
}

Cyclo Cyclo::root_of_unity(const Rational& t, long order) {
  Rational tt = mod1(t);
  long long num = scale_exact(tt, order);
  return root_of_unity((long)num, order, order);
}

bool Cyclo::is_zero() const {
  for (const auto& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclo::is_rational() const { return order_ == 1; }

Cyclo Cyclo::to_order(long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw std::invalid_argument("cyclo order not a divisor");
  long step = m / order_;
  std::vector<Rational> poly((c_.size() - 1) * step + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) poly[k * step] = c_[k];
  return from_poly(std::move(poly), m);
}

std::pair<Cyclo, Cyclo> lift_pair(const Cyclo& a, const Cyclo& b) {
  if (a.order_ == b.order_) return {a, b};
  if (b.order_ % a.order_ == 0) return {a.to_order(b.order_), b};
  if (a.order_ % b.order_ == 0) return {a, b.to_order(a.order_)};
  throw std::invalid_argument("cyclo order mismatch: " + std::to_string(a.order_) +
                              " vs " + std::to_string(b.order_));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  // Rationals collapse to order 1 under canon(), so lift_pair cannot give
  // them a full-length coefficient vector; add into the constant slot.
  if (a.is_rational() || b.is_rational()) {
    const Cyclo& r = a.is_rational() ? a : b;
    Cyclo out = a.is_rational() ? b : a;
    out.c_[0] += r.c_[0];
    out.canon();
    return out;
  }
  auto [x, y] = lift_pair(a, b);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  x.canon();
  return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& r : out.c_) r = -r;
  return out;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  // rational fast paths
  if (a.is_rational()) {
    if (a.c_[0] == 0) return Cyclo();
    Cyclo out = b;
    for (auto& r : out.c_) r *= a.c_[0];
    out.canon();
    return out;
  }
  if (b.is_rational()) return b * a;
  auto [x, y] = lift_pair(a, b);
  std::vector<Rational> conv(x.c_.size() + y.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j] == 0) continue;
      conv[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return Cyclo::from_poly(std::move(conv), x.order_);
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.order_ == b.order_) return a.c_ == b.c_;
  // canon() keeps rational values at order 1, so differing orders with a
  // rational on one side can only be equal if both sides are rational.
  if (a.is_rational() || b.is_rational()) {
    return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
  }
  auto [x, y] = lift_pair(a, b);
  return x.c_ == y.c_;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw std::domain_error("cyclo: division by zero");
  if (is_rational()) return Cyclo(Rational(1) / c_[0]);
  // extended Euclid in Q[x] between this (deg < totient) and Phi_N
  using QPoly = std::vector<Rational>;
  auto deg = [](const QPoly& p) {
    for (long i = (long)p.size() - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1L;
  };
  const ZPoly& phiz = cyclotomic_poly(order_);
  QPoly r0(phiz.size());
  for (size_t i = 0; i < phiz.size(); ++i) r0[i] = Rational(phiz[i]);
  QPoly r1 = c_;
  QPoly s0(1, Rational(0)), s1(1, Rational(1));  // coefficients of `this`
  while (deg(r1) > 0) {
    // r0 = q*r1 + r
    QPoly q(std::max<long>(deg(r0) - deg(r1) + 1, 1), Rational(0));
    QPoly r = r0;
    long d1 = deg(r1);
    Rational lead = r1[d1];
    for (long i = deg(r) - d1; i >= 0; --i) {
      Rational c = r[i + d1] / lead;
      if (c == 0) continue;
      q[i] = c;
      for (long j = 0; j <= d1; ++j) r[i + j] -= c * r1[j];
    }
    // s = s0 - q*s1
    QPoly s(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  long d = deg(r1);
  if (d < 0) throw std::domain_error("cyclo inv: zero divisor (not a field?)");
  Rational unit = r1[0];
  QPoly res = s1;
  for (auto& c : res) c /= unit;
  return from_poly(std::move(res), order_);
}

std::complex<double> Cyclo::approx() const {
  std::complex<double> out = 0;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double ang = 2.0 * std::numbers::pi * (double)k / (double)order_;
    out += c_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return out;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) {
  if (c.is_zero()) return os << "0";
  bool first = true;
  for (size_t k = 0; k < c.coeffs().size(); ++k) {
    const Rational& r = c.coeffs()[k];
    if (r == 0) continue;
    if (!first) os << (r > 0 ? " + " : " - ");
    else if (r < 0) os << "-";
    Rational a = abs(r);
    if (k == 0) os << a.get_str();
    else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << c.order() << "^" << k;
    }
    first = false;
  }
  return os;
}

}  // namespace epg
