#include "epg/cohring.hpp"

#include <algorithm>
#include <stdexcept>

namespace epg {

CohomSeries::CohomSeries(CohomRing ring, long denom, const Rational& qmax,
                         const Rational& ywindow)
    : ring_(std::move(ring)), denom_(denom), qmax_(qmax), ywindow_(ywindow) {}

bool CohomSeries::key_ok(const Key& k) const {
  if (k.size() != ring_.ngens()) return false;
  for (size_t i = 0; i < k.size(); ++i)
    if (k[i] < 0 || k[i] >= ring_.trunc[i]) return false;
  return true;
}

void CohomSeries::insert(const Key& k, const Series& s) {
  // Each coefficient keeps its own trusted region (series products sharpen
  // or shrink regions per key); merging through Series::operator+ takes
  // the honest minimum.
  auto it = c_.find(k);
  if (it == c_.end()) {
    if (!s.is_zero()) c_.emplace(k, s);
  } else {
    it->second = it->second + s;
  }
}

Rational CohomSeries::qmax() const {
  Rational m = qmax_;
  for (const auto& [k, s] : c_) m = std::min(m, s.qmax());
  return m;
}

Rational CohomSeries::ywindow() const {
  Rational m = ywindow_;
  for (const auto& [k, s] : c_) m = std::min(m, s.ywindow());
  return m;
}

CohomSeries CohomSeries::constant(const CohomRing& ring, const Series& s) {
  CohomSeries out(ring, s.denom(), s.qmax(), s.ywindow());
  out.insert(Key(ring.ngens(), 0), s);
  return out;
}

CohomSeries CohomSeries::monomial(const CohomRing& ring, const Key& k,
                                  const Series& s) {
  CohomSeries out(ring, s.denom(), s.qmax(), s.ywindow());
  if (!out.key_ok(k)) throw std::invalid_argument("cohom monomial key");
  out.insert(k, s);
  return out;
}

Series CohomSeries::coeff(const Key& k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Series(denom_, qmax_, ywindow_) : it->second;
}

void CohomSeries::add(const Key& k, const Series& s) {
  if (!key_ok(k)) throw std::invalid_argument("cohom key out of range");
  insert(k, s);
}

CohomSeries CohomSeries::operator-() const {
  CohomSeries out(ring_, denom_, qmax_, ywindow_);
  for (const auto& [k, s] : c_) out.c_.emplace(k, -s);
  return out;
}

namespace {
void check_rings(const CohomSeries& a, const CohomSeries& b) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument("cohom ring mismatch");
}
}  // namespace

CohomSeries operator+(const CohomSeries& a, const CohomSeries& b) {
  check_rings(a, b);
  CohomSeries out(a.ring_, a.denom_, std::min(a.qmax_, b.qmax_),
                  std::min(a.ywindow_, b.ywindow_));
  for (const auto& [k, s] : a.c_) out.insert(k, s);
  for (const auto& [k, s] : b.c_) out.insert(k, s);
  return out;
}

CohomSeries operator-(const CohomSeries& a, const CohomSeries& b) {
  return a + (-b);
}

CohomSeries operator*(const CohomSeries& a, const CohomSeries& b) {
  check_rings(a, b);
  CohomSeries out(a.ring_, a.denom_, std::min(a.qmax_, b.qmax_),
                  std::min(a.ywindow_, b.ywindow_));
  for (const auto& [ka, sa] : a.c_) {
    for (const auto& [kb, sb] : b.c_) {
      CohomSeries::Key k(ka.size());
      bool ok = true;
      for (size_t i = 0; i < k.size(); ++i) {
        k[i] = ka[i] + kb[i];
        if (k[i] >= out.ring_.trunc[i]) { ok = false; break; }
      }
      if (ok) out.insert(k, sa * sb);
    }
  }
  return out;
}

CohomSeries CohomSeries::scaled(const Series& s) const {
  CohomSeries out(ring_, denom_, std::min(qmax_, s.qmax()),
                  std::min(ywindow_, s.ywindow()));
  for (const auto& [k, c] : c_) out.insert(k, c * s);
  return out;
}

CohomSeries CohomSeries::pow(long e) const {
  if (e < 0) throw std::invalid_argument("cohom pow: negative exponent");
  CohomSeries out = constant(
      ring_, Series::constant(denom_, qmax_, ywindow_, Cyclo(Rational(1))));
  CohomSeries base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) out *= base;
    if (e > 1) base *= base;
  }
  return out;
}

CohomSeries CohomSeries::inverted() const {
  Key k0(ring_.ngens(), 0);
  Series a0 = coeff(k0);
  Series ia0 = a0.inverted();  // throws on a singular leading term
  // (a0 + E)^{-1} = ia0 * sum_j (-E * ia0)^j, E nilpotent.
  CohomSeries base = constant(ring_, ia0);
  CohomSeries neg_e(ring_, base.denom_, base.qmax_, base.ywindow_);
  for (const auto& [k, s] : c_)
    if (k != k0) neg_e.insert(k, -s);
  if (neg_e.is_zero()) return base;
  CohomSeries t = neg_e.scaled(ia0);
  CohomSeries acc = base;
  CohomSeries pw = base;
  for (long j = 0; j < ring_.nilpotency_degree(); ++j) {
    pw *= t;
    if (pw.is_zero()) break;
    acc += pw;
  }
  return acc;
}

Series CohomSeries::pushforward() const {
  Key top(ring_.ngens());
  for (size_t i = 0; i < top.size(); ++i) top[i] = (int)ring_.trunc[i] - 1;
  return coeff(top);
}

std::vector<FixedLocus> fixed_loci(long n, const std::vector<Rational>& g,
                                   const std::vector<Rational>& h) {
  if ((long)g.size() != n || (long)h.size() != n)
    throw std::invalid_argument("fixed_loci: character vector size");
  std::map<std::pair<Rational, Rational>, std::vector<int>> classes;
  for (long i = 0; i < n; ++i)
    classes[{mod1(g[i]), mod1(h[i])}].push_back((int)i);
  std::vector<FixedLocus> out;
  for (auto& [cp, coords] : classes)
    out.push_back(FixedLocus{std::move(coords), cp});
  return out;
}

std::vector<ChernRoot> tangent_chern_roots(const FixedLocus& locus, long n,
                                           const std::vector<Rational>& g,
                                           const std::vector<Rational>& h) {
  std::vector<ChernRoot> roots;
  bool flagged = false;
  for (long i = 0; i < n; ++i) {
    ChernRoot r;
    r.char_g = mod1(g[i] - locus.charpair.first);
    r.char_h = mod1(h[i] - locus.charpair.second);
    if (!flagged && r.char_g == 0 && r.char_h == 0) {
      r.flagged_trivial = true;
      flagged = true;
    }
    roots.push_back(std::move(r));
  }
  if (!flagged)
    throw std::logic_error("tangent_chern_roots: locus has no trivial root");
  return roots;
}

}  // namespace epg
