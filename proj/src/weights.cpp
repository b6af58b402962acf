#include "epg/weights.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace epg {

WeightSystem::WeightSystem(std::vector<long> w, long d)
    : weights(std::move(w)), degree(d) {
  if (weights.empty()) throw std::invalid_argument("empty weight system");
  if (degree <= 0) throw std::invalid_argument("degree must be positive");
  for (long wi : weights)
    if (wi <= 0) throw std::invalid_argument("weights must be positive");
}

bool WeightSystem::cy_flag() const {
  long s = 0;
  for (long wi : weights) s += wi;
  return s == degree;
}

std::vector<Rational> WeightSystem::j_w() const {
  std::vector<Rational> v;
  for (long i = 0; i < n(); ++i) v.push_back(charge(i));
  return v;
}

GroupSpec GroupSpec::cyclic(const std::vector<Rational>& gen) {
  GroupSpec g;
  std::set<std::vector<Rational>> seen;
  std::vector<Rational> cur(gen.size(), Rational(0));
  while (true) {
    std::vector<Rational> canon;
    for (const auto& r : cur) canon.push_back(mod1(r));
    if (!seen.insert(canon).second) break;
    g.elements.push_back(canon);
    for (size_t i = 0; i < cur.size(); ++i) cur[i] = mod1(cur[i] + gen[i]);
  }
  return g;
}

GroupSpec GroupSpec::product_mu(const std::vector<long>& w) {
  GroupSpec g;
  g.elements.push_back(std::vector<Rational>(w.size(), Rational(0)));
  for (size_t i = 0; i < w.size(); ++i) {
    std::vector<std::vector<Rational>> next;
    for (const auto& e : g.elements)
      for (long c = 0; c < w[i]; ++c) {
        auto v = e;
        v[i] = make_rational(c, w[i]);
        next.push_back(std::move(v));
      }
    g.elements = std::move(next);
  }
  return g;
}

long GroupSpec::max_char_denominator() const {
  long l = 1;
  for (const auto& e : elements)
    for (const auto& r : e) {
      if (!r.get_den().fits_slong_p())
        throw std::overflow_error("character denominator overflow");
      l = std::lcm(l, r.get_den().get_si());
    }
  return l;
}

}  // namespace epg
