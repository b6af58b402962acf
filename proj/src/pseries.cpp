#include "epg/pseries.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace epg {

using json = nlohmann::json;

Series::Series(long denom, const Rational& qmax, const Rational& ywindow)
    : denom_(denom) {
  if (denom <= 0) throw std::invalid_argument("series denom must be positive");
  qmax_s_ = scale_exact(qmax, denom);
  ywin_s_ = scale_exact(ywindow, denom);
  if (ywin_s_ < 0) throw std::invalid_argument("ywindow must be >= 0");
}

size_t Series::term_count() const {
  size_t n = 0;
  for (const auto& [qs, yp] : t_) n += yp.size();
  return n;
}

void Series::insert(long long qs, long long ys, const Cyclo& c) {
  if (c.is_zero() || !in_region(qs, ys)) return;
  auto& yp = t_[qs];
  auto it = yp.find(ys);
  if (it == yp.end()) {
    yp.emplace(ys, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) {
      yp.erase(it);
      if (yp.empty()) t_.erase(qs);
    }
  }
}

Cyclo Series::coeff(const Rational& eq, const Rational& ey) const {
  long long qs = scale_exact(eq, denom_), ys = scale_exact(ey, denom_);
  auto it = t_.find(qs);
  if (it == t_.end()) return Cyclo();
  auto jt = it->second.find(ys);
  return jt == it->second.end() ? Cyclo() : jt->second;
}

void Series::add_term(const Rational& eq, const Rational& ey, const Cyclo& c) {
  insert(scale_exact(eq, denom_), scale_exact(ey, denom_), c);
}

Series Series::constant(long denom, const Rational& qmax, const Rational& yw,
                        const Cyclo& c) {
  Series s(denom, qmax, yw);
  s.insert(0, 0, c);
  return s;
}

Series Series::monomial(long denom, const Rational& qmax, const Rational& yw,
                        const Cyclo& c, const Rational& eq, const Rational& ey) {
  Series s(denom, qmax, yw);
  s.add_term(eq, ey, c);
  return s;
}

namespace {
void check_same_denom(const Series& a, const Series& b) {
  if (a.denom() != b.denom())
    throw std::invalid_argument("series denom mismatch: " +
                                std::to_string(a.denom()) + " vs " +
                                std::to_string(b.denom()));
}
}  // namespace

Series Series::operator-() const {
  Series out = *this;
  for (auto& [qs, yp] : out.t_)
    for (auto& [ys, c] : yp) c = -c;
  return out;
}

Series operator+(const Series& a, const Series& b) {
  check_same_denom(a, b);
  Series out(a.denom_, std::min(a.qmax(), b.qmax()),
             std::min(a.ywindow(), b.ywindow()));
  for (const auto& [qs, yp] : a.t_)
    for (const auto& [ys, c] : yp) out.insert(qs, ys, c);
  for (const auto& [qs, yp] : b.t_)
    for (const auto& [ys, c] : yp) out.insert(qs, ys, c);
  return out;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  check_same_denom(a, b);
  if (a.is_zero() || b.is_zero())
    return Series(a.denom_, std::min(a.qmax(), b.qmax()),
                  std::min(a.ywindow(), b.ywindow()));
  // A product term at eq = e is complete only if every split e1 + e2 = e
  // with e1 >= lead(a), e2 >= lead(b) lies inside both operand regions;
  // the binding constraints are e <= qmax(a) + lead(b) and symmetrically.
  // With nonnegative leads this is at least min(qmax); a negative lead
  // (an inverted series) genuinely lowers the trusted range.
  Rational new_qmax = std::min(a.qmax() + b.min_q_exponent(),
                               b.qmax() + a.min_q_exponent());
  Series out(a.denom_, new_qmax, std::min(a.ywindow(), b.ywindow()));
  // iterate the smaller operand outermost
  const Series& s = (a.term_count() <= b.term_count()) ? a : b;
  const Series& l = (&s == &a) ? b : a;
  for (const auto& [qs1, yp1] : s.t_) {
    for (const auto& [qs2, yp2] : l.t_) {
      long long qs = qs1 + qs2;
      if (qs > out.qmax_s_) break;  // qs2 ascends
      for (const auto& [ys1, c1] : yp1)
        for (const auto& [ys2, c2] : yp2) {
          long long ys = ys1 + ys2;
          if (ys > out.ywin_s_ || ys < -out.ywin_s_) continue;
          out.insert(qs, ys, c1 * c2);
        }
    }
  }
  return out;
}

Series Series::scaled(const Cyclo& c) const {
  if (c.is_zero()) return Series(denom_, qmax(), ywindow());
  Series out(denom_, qmax(), ywindow());
  for (const auto& [qs, yp] : t_)
    for (const auto& [ys, v] : yp) out.insert(qs, ys, v * c);
  return out;
}

Series Series::mul_monomial(const Cyclo& c, const Rational& eq,
                            const Rational& ey) const {
  // The shift moves the trusted region with the terms: complete through
  // qmax + eq, and the far side of the y window loses |ey|.
  Series out(denom_, qmax() + eq, ywindow() - abs(ey));
  long long dq = scale_exact(eq, denom_), dy = scale_exact(ey, denom_);
  for (const auto& [qs, yp] : t_)
    for (const auto& [ys, v] : yp) out.insert(qs + dq, ys + dy, v * c);
  return out;
}

namespace {

using YPoly = std::map<long long, Cyclo>;

YPoly ypoly_mul(const YPoly& a, const YPoly& b, long long ylo, long long yhi) {
  YPoly out;
  for (const auto& [ya, ca] : a)
    for (const auto& [yb, cb] : b) {
      long long y = ya + yb;
      if (y < ylo || y > yhi) continue;
      Cyclo c = ca * cb;
      if (c.is_zero()) continue;
      auto it = out.find(y);
      if (it == out.end()) out.emplace(y, std::move(c));
      else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

// Inverse of a Laurent polynomial in y within [-W, W], expanding per the
// direction rule: divide by the minimal-exponent monomial, then invert
// 1 + u with u supported on strictly positive exponents.
YPoly ypoly_invert(const YPoly& a, long long W) {
  if (a.empty()) throw std::domain_error("singular leading term: zero slice");
  auto lead = a.begin();
  long long ym = lead->first;
  Cyclo minv = lead->second.inv();
  YPoly u;  // -(a/m - 1), support on positive exponents
  for (auto it = std::next(a.begin()); it != a.end(); ++it)
    u.emplace(it->first - ym, -(it->second * minv));
  // inv(a) = m^{-1} y^{-ym} * sum_k u^k ; keep exponents of the sum within
  // [0, W + |ym| + W] so that the final clipped inverse is exact on [-W, W].
  long long cap = 2 * W + std::llabs(ym);
  YPoly acc{{0, Cyclo(Rational(1))}};
  YPoly pw{{0, Cyclo(Rational(1))}};
  while (!u.empty()) {
    pw = ypoly_mul(pw, u, 0, cap);
    if (pw.empty()) break;
    for (const auto& [y, c] : pw) {
      auto it = acc.find(y);
      if (it == acc.end()) acc.emplace(y, c);
      else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  YPoly out;
  for (const auto& [y, c] : acc) {
    long long yy = y - ym;
    if (yy >= -W && yy <= W) out.emplace(yy, c * minv);
  }
  return out;
}

}  // namespace

Series Series::inverted() const {
  if (t_.empty())
    throw std::domain_error("singular leading term: cannot invert zero series");
  long long q0 = t_.begin()->first;  // minimal q slice
  long long W = ywin_s_;
  // Knowing the input mod q^{>qmax} pins the inverse exactly up to
  // q^{qmax - 2*q0}: a positive lead shrinks the trusted range, a negative
  // lead extends it.
  Rational new_qmax = qmax() - 2 * make_rational(q0, denom_);
  Series out(denom_, new_qmax, ywindow());
  YPoly b0 = ypoly_invert(t_.begin()->second, W);
  std::map<long long, YPoly> inv;  // offset s -> slice at q = -q0 + s
  inv.emplace(0, b0);
  for (const auto& [y, c] : b0) out.insert(-q0, y, c);
  // Offsets of a relative to its lead slice.
  std::vector<std::pair<long long, const YPoly*>> offs;
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
    offs.emplace_back(it->first - q0, &it->second);
  if (offs.empty()) return out;
  long long smax = out.qmax_scaled() + q0;  // -q0 + s <= new qmax
  long long g = 0;
  for (auto& [d, p] : offs) g = std::gcd(g, d);
  if (g == 0) g = 1;
  for (long long s = g; s <= smax; s += g) {
    YPoly acc;
    bool any = false;
    for (auto& [d, ap] : offs) {
      if (d > s) break;
      auto it = inv.find(s - d);
      if (it == inv.end()) continue;
      any = true;
      YPoly prod = ypoly_mul(*ap, it->second, -W, W);
      for (auto& [y, c] : prod) {
        auto jt = acc.find(y);
        if (jt == acc.end()) acc.emplace(y, std::move(c));
        else {
          jt->second += c;
          if (jt->second.is_zero()) acc.erase(jt);
        }
      }
    }
    if (!any || acc.empty()) continue;
    // slice_s = -b0 * acc
    YPoly neg;
    for (auto& [y, c] : acc) neg.emplace(y, -c);
    YPoly slice = ypoly_mul(b0, neg, -W, W);
    if (slice.empty()) continue;
    for (const auto& [y, c] : slice) out.insert(-q0 + s, y, c);
    inv.emplace(s, std::move(slice));
  }
  return out;
}

Series Series::subst_y_scale(const Rational& phase, const Rational& r) const {
  long long rs = scale_exact(r, denom_);
  Rational new_qmax = qmax() - abs(r) * ywindow();
  Series out(denom_, new_qmax, ywindow());
  for (const auto& [qs, yp] : t_)
    for (const auto& [ys, c] : yp) {
      Cyclo ph = Cyclo::root_of_unity(phase * make_rational(ys, denom_), denom_);
      // exponents: eq + r*ey computed on the scaled lattice
      long long qs2 = qs + (rs * ys) / denom_;
      if ((rs * ys) % denom_ != 0)
        throw std::logic_error("subst_y_scale: off-lattice shift");
      out.insert(qs2, ys, c * ph);
    }
  return out;
}

Series Series::subst_q_phase() const {
  Series out(denom_, qmax(), ywindow());
  for (const auto& [qs, yp] : t_) {
    Cyclo ph = Cyclo::root_of_unity(make_rational(qs, denom_), denom_);
    for (const auto& [ys, c] : yp) out.insert(qs, ys, c * ph);
  }
  return out;
}

Series Series::q_limit() const {
  if (!t_.empty() && t_.begin()->first < 0)
    throw std::domain_error("q_limit: series not holomorphic at the cusp (q^" +
                            make_rational(t_.begin()->first, denom_).get_str() +
                            " present)");
  Series out(denom_, qmax(), ywindow());
  auto it = t_.find(0);
  if (it != t_.end())
    for (const auto& [ys, c] : it->second) out.insert(0, ys, c);
  return out;
}

Rational Series::min_q_exponent() const {
  if (t_.empty()) throw std::domain_error("min_q_exponent of zero series");
  return make_rational(t_.begin()->first, denom_);
}

Rational Series::max_abs_y_exponent() const {
  long long m = 0;
  for (const auto& [qs, yp] : t_) {
    if (!yp.empty()) {
      m = std::max(m, std::llabs(yp.begin()->first));
      m = std::max(m, std::llabs(yp.rbegin()->first));
    }
  }
  return make_rational(m, denom_);
}

Series Series::lift_denom(long nd) const {
  if (nd == denom_) return *this;
  if (nd % denom_ != 0)
    throw std::invalid_argument("lift_denom: not a multiple");
  long f = nd / denom_;
  Series out(nd, qmax(), ywindow());
  for (const auto& [qs, yp] : t_)
    for (const auto& [ys, c] : yp) out.insert(qs * f, ys * f, c);
  return out;
}

Series Series::restricted(const Rational& qm, const Rational& yw) const {
  Series out(denom_, std::min(qm, qmax()), std::min(yw, ywindow()));
  for (const auto& [qs, yp] : t_)
    for (const auto& [ys, c] : yp) out.insert(qs, ys, c);
  return out;
}

std::string Series::Mismatch::describe() const {
  if (equal) return empty_region ? "empty comparison region" : "equal";
  std::ostringstream os;
  os << "first mismatch at q^" << eq.get_str() << " y^" << ey.get_str()
     << ": " << lhs << " vs " << rhs;
  return os.str();
}

Series::Mismatch Series::compare(const Series& a0, const Series& b0) {
  long nd = std::lcm(a0.denom(), b0.denom());
  Series a = a0.lift_denom(nd), b = b0.lift_denom(nd);
  long long qm = std::min(a.qmax_s_, b.qmax_s_);
  long long yw = std::min(a.ywin_s_, b.ywin_s_);
  Mismatch r;
  if (qm < 0 && a.t_.empty() && b.t_.empty()) {
    r.empty_region = true;
    return r;
  }
  // walk union of support within the common region, smallest (eq, ey) first
  std::map<std::pair<long long, long long>, std::pair<Cyclo, Cyclo>> joint;
  for (const auto& [qs, yp] : a.t_) {
    if (qs > qm) break;
    for (const auto& [ys, c] : yp)
      if (std::llabs(ys) <= yw) joint[{qs, ys}].first = c;
  }
  for (const auto& [qs, yp] : b.t_) {
    if (qs > qm) break;
    for (const auto& [ys, c] : yp)
      if (std::llabs(ys) <= yw) joint[{qs, ys}].second = c;
  }
  for (const auto& [k, v] : joint) {
    if (!(v.first == v.second)) {
      r.equal = false;
      r.eq = make_rational(k.first, nd);
      r.ey = make_rational(k.second, nd);
      r.lhs = v.first;
      r.rhs = v.second;
      return r;
    }
  }
  return r;
}

namespace {
json cyclo_to_json(const Cyclo& c) {
  json coeffs = json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.get_str());
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}
Cyclo cyclo_from_json(const json& j) {
  long order = j.at("order").get<long>();
  const auto& arr = j.at("coeffs");
  if ((long)arr.size() != totient(order))
    throw std::invalid_argument("cyclo json: coeff length != totient(order)");
  Cyclo out;
  // rebuild via sum of monomials (canonical by construction)
  for (size_t k = 0; k < arr.size(); ++k) {
    Rational r = rational_from_string(arr[k].get<std::string>());
    if (r == 0) continue;
    Cyclo mono = Cyclo::root_of_unity((long)k, order, order);
    out += mono * Cyclo(r);
  }
  return out;
}
}  // namespace

std::string Series::to_json() const {
  json terms = json::array();
  for (const auto& [qs, yp] : t_)
    for (const auto& [ys, c] : yp)
      terms.push_back(json{{"q", make_rational(qs, denom_).get_str()},
                           {"y", make_rational(ys, denom_).get_str()},
                           {"coeff", cyclo_to_json(c)}});
  json j{{"denom", denom_},
         {"qmax", qmax().get_str()},
         {"ywindow", ywindow().get_str()},
         {"terms", terms}};
  return j.dump(2);
}

Series Series::from_json(const std::string& text) {
  json j = json::parse(text);
  Series out(j.at("denom").get<long>(),
             rational_from_string(j.at("qmax").get<std::string>()),
             rational_from_string(j.at("ywindow").get<std::string>()));
  for (const auto& t : j.at("terms"))
    out.add_term(rational_from_string(t.at("q").get<std::string>()),
                 rational_from_string(t.at("y").get<std::string>()),
                 cyclo_from_json(t.at("coeff")));
  return out;
}

}  // namespace epg
