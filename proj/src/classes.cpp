#include "cremona/classes.hpp"

#include <algorithm>

namespace cremona {

PMClass::PMClass(Rat degree, std::map<PointId, Rat> mults)
    : degree_(std::move(degree)), mults_(std::move(mults)) {
  for (auto it = mults_.begin(); it != mults_.end();) {
    if (it->second == 0)
      it = mults_.erase(it);
    else
      ++it;
  }
}

PMClass PMClass::exceptional(PointId p) {
  PMClass c;
  c.mults_[p] = -1;
  return c;
}

Rat PMClass::mult(PointId p) const {
  auto it = mults_.find(p);
  return it == mults_.end() ? Rat(0) : it->second;
}

void PMClass::set_mult(PointId p, const Rat& value) {
  if (value == 0)
    mults_.erase(p);
  else
    mults_[p] = value;
}

std::vector<PointId> PMClass::support() const {
  std::vector<PointId> out;
  out.reserve(mults_.size());
  for (const auto& [p, v] : mults_) out.push_back(p);
  return out;
}

PMClass& PMClass::operator+=(const PMClass& other) {
  degree_ += other.degree_;
  for (const auto& [p, v] : other.mults_) set_mult(p, mult(p) + v);
  return *this;
}

PMClass& PMClass::operator-=(const PMClass& other) {
  degree_ -= other.degree_;
  for (const auto& [p, v] : other.mults_) set_mult(p, mult(p) - v);
  return *this;
}

PMClass& PMClass::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    degree_ = 0;
    mults_.clear();
    return *this;
  }
  degree_ *= scalar;
  for (auto& [p, v] : mults_) v *= scalar;
  return *this;
}

Rat intersect(const PMClass& a, const PMClass& b) {
  Rat value = a.degree() * b.degree();
  const auto& small = a.mults().size() <= b.mults().size() ? a.mults() : b.mults();
  const PMClass& other = a.mults().size() <= b.mults().size() ? b : a;
  for (const auto& [p, v] : small) value -= v * other.mult(p);
  return value;
}

Rat anti_canonical(const PMClass& c) {
  Rat value = 3 * c.degree();
  for (const auto& [p, v] : c.mults()) value -= v;
  return value;
}

Rat excess(const PMClass& c, const Configuration& config, PointId p) {
  config.require_point(p);
  Rat value = c.mult(p);
  for (const auto& [q, v] : c.mults())
    if (config.adherent(q, p)) value -= v;
  return value;
}

std::vector<std::pair<PointId, Rat>> order_multiplicities(const PMClass& c) {
  std::vector<std::pair<PointId, Rat>> out(c.mults().begin(), c.mults().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

Rat top_mult_sum(const PMClass& c, int k) {
  auto ordered = order_multiplicities(c);
  Rat sum = 0;
  for (int i = 0; i < k && i < static_cast<int>(ordered.size()); ++i) sum += ordered[i].second;
  return sum;
}

DistanceOrder cmp_dist(const PMClass& c, const PMClass& a, const PMClass& b) {
  Rat c2 = self_intersect(c), a2 = self_intersect(a), b2 = self_intersect(b);
  if (c2 <= 0 || a2 <= 0 || b2 <= 0)
    throw Error(ErrorCode::NonPositiveClass, "cmp_dist needs positive self-intersections");
  Rat ca = intersect(c, a), cb = intersect(c, b);
  if (ca <= 0 || cb <= 0)
    throw Error(ErrorCode::NonPositiveClass, "cmp_dist needs classes on the same sheet");
  Rat lhs = ca * ca * b2;
  Rat rhs = cb * cb * a2;
  if (lhs < rhs) return DistanceOrder::CloserToFirst;
  if (lhs > rhs) return DistanceOrder::CloserToSecond;
  return DistanceOrder::Equidistant;
}

bool is_boundary(const PMClass& c) {
  return c.degree() > 0 && self_intersect(c) == 0;
}

}  // namespace cremona
