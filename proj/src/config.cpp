#include "cremona/config.hpp"

#include <algorithm>

namespace cremona {

void Configuration::require_point(PointId p) const {
  if (!has_point(p))
    throw Error(ErrorCode::UnknownPoint, "point #" + std::to_string(p.value) + " does not resolve");
}

const PointRecord& Configuration::point(PointId p) const {
  require_point(p);
  return points_[p.value];
}

const CurveRecord& Configuration::curve(std::size_t index) const {
  if (index >= curves_.size())
    throw Error(ErrorCode::UnknownPoint, "curve index out of range");
  return curves_[index];
}

const std::string& Configuration::name(PointId p) const {
  require_point(p);
  return names_[p.value];
}

std::optional<PointId> Configuration::find_point(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const std::vector<PointId>& Configuration::parents(PointId p) const {
  return point(p).parents;
}

std::vector<PointId> Configuration::children(PointId p) const {
  require_point(p);
  std::vector<PointId> out;
  for (const PointRecord& rec : points_)
    for (PointId parent : rec.parents)
      if (parent == p) out.push_back(rec.id);
  return out;
}

bool Configuration::adherent(PointId child, PointId parent) const {
  const auto& ps = parents(child);
  return std::find(ps.begin(), ps.end(), parent) != ps.end();
}

std::set<PointId> Configuration::ancestors(PointId p) const {
  std::set<PointId> out;
  std::vector<PointId> stack(parents(p).begin(), parents(p).end());
  while (!stack.empty()) {
    PointId q = stack.back();
    stack.pop_back();
    if (out.insert(q).second)
      for (PointId r : parents(q)) stack.push_back(r);
  }
  return out;
}

void Configuration::validate_parents(const std::vector<PointId>& parents) const {
  if (parents.size() > 2)
    throw Error(ErrorCode::SatelliteViolation, "a point is adherent to at most two points");
  for (PointId p : parents)
    if (!has_point(p))
      throw Error(ErrorCode::UnknownParent, "parent #" + std::to_string(p.value) + " does not resolve");
  if (parents.size() == 2) {
    if (parents[0] == parents[1])
      throw Error(ErrorCode::SatelliteViolation, "duplicate parent");
    // Satellite condition: the two carriers must be adherent to one
    // another, otherwise their exceptional divisors do not meet.
    if (!adherent(parents[0], parents[1]) && !adherent(parents[1], parents[0]))
      throw Error(ErrorCode::SatelliteViolation,
                  "satellite parents " + name(parents[0]) + ", " + name(parents[1]) +
                      " are not mutually adherent");
  }
}

std::string Configuration::fresh_name() {
  for (;;) {
    std::string candidate = "_g" + std::to_string(fresh_counter_++);
    if (!by_name_.count(candidate)) return candidate;
  }
}

PointId Configuration::add_point(const std::vector<PointId>& parents) {
  return add_point_named(fresh_name(), parents);
}

PointId Configuration::add_point_named(const std::string& name, const std::vector<PointId>& parents) {
  if (by_name_.count(name))
    throw Error(ErrorCode::SchemaError, "duplicate point id '" + name + "'");
  validate_parents(parents);
  PointId id{static_cast<std::uint32_t>(points_.size())};
  PointRecord rec{id, parents};
  std::sort(rec.parents.begin(), rec.parents.end());
  points_.push_back(std::move(rec));
  names_.push_back(name);
  by_name_.emplace(name, id);
  return id;
}

void Configuration::validate_curve(const CurveRecord& curve) const {
  if (curve.degree < 1)
    throw Error(ErrorCode::InvalidCurve, "curve degree must be positive");
  for (const auto& [p, m] : curve.mults) {
    require_point(p);
    if (m < 0) throw Error(ErrorCode::InvalidCurve, "negative curve multiplicity");
  }
  auto mult_at = [&](PointId p) {
    auto it = curve.mults.find(p);
    return it == curve.mults.end() ? 0 : it->second;
  };
  // Excess positivity along the curve: at every point, the multiplicity
  // dominates the sum over points adherent to it.
  std::set<PointId> to_check;
  for (const auto& [p, m] : curve.mults) {
    if (m <= 0) continue;
    to_check.insert(p);
    for (PointId q : parents(p)) to_check.insert(q);
  }
  for (PointId p : to_check) {
    int childs = 0;
    for (const auto& [q, m] : curve.mults)
      if (m > 0 && adherent(q, p)) childs += m;
    if (mult_at(p) < childs)
      throw Error(ErrorCode::ExcessViolation,
                  "curve multiplicity at " + name(p) + " is below the sum over adherent points");
  }
  if (curve.degree == 1) {
    int positive = 0;
    for (const auto& [p, m] : curve.mults)
      if (m > 0) ++positive;
    if (positive < 2)
      throw Error(ErrorCode::InvalidCurve, "a declared line needs at least two points");
    // Two points determine at most one line.
    for (const CurveRecord& other : curves_) {
      if (other.degree != 1) continue;
      int shared = 0;
      for (const auto& [p, m] : curve.mults)
        if (m > 0 && other.mults.count(p) && other.mults.at(p) > 0) ++shared;
      if (shared >= 2)
        throw Error(ErrorCode::IncidenceConflict, "two distinct lines through the same two points");
    }
  }
}

std::size_t Configuration::declare_curve(int degree, const std::map<PointId, int>& mults) {
  CurveRecord rec{degree, {}};
  for (const auto& [p, m] : mults)
    if (m != 0) rec.mults[p] = m;
  validate_curve(rec);
  curves_.push_back(std::move(rec));
  return curves_.size() - 1;
}

void Configuration::add_curve_point(std::size_t curve_index, PointId p, int mult) {
  if (curve_index >= curves_.size())
    throw Error(ErrorCode::UnknownPoint, "curve index out of range");
  require_point(p);
  CurveRecord updated = curves_[curve_index];
  updated.mults[p] += mult;
  // Validate against the other curves only (the updated record replaces
  // the old one, which would otherwise collide with itself).
  CurveRecord saved = curves_[curve_index];
  curves_[curve_index] = updated;
  try {
    std::vector<CurveRecord> rest;
    for (std::size_t i = 0; i < curves_.size(); ++i)
      if (i != curve_index) rest.push_back(curves_[i]);
    std::swap(curves_, rest);
    validate_curve(updated);
    std::swap(curves_, rest);
  } catch (...) {
    curves_[curve_index] = saved;
    throw;
  }
}

bool Configuration::is_pre_consistent(const std::set<PointId>& pts) const {
  for (PointId p : pts) {
    for (PointId parent : parents(p))
      if (!pts.count(parent)) return false;
  }
  return true;
}

std::optional<std::size_t> Configuration::aligned_line(const std::set<PointId>& pts) const {
  for (PointId p : pts) require_point(p);
  if (pts.empty()) return std::nullopt;
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    const CurveRecord& c = curves_[i];
    if (c.degree != 1) continue;
    bool all = true;
    for (PointId p : pts) {
      auto it = c.mults.find(p);
      if (it == c.mults.end() || it->second <= 0) {
        all = false;
        break;
      }
    }
    if (all) return i;
  }
  return std::nullopt;
}

bool Configuration::aligned(const std::set<PointId>& pts) const {
  return aligned_line(pts).has_value();
}

bool Configuration::on_conic(const std::set<PointId>& pts) const {
  for (PointId p : pts) require_point(p);
  for (const CurveRecord& c : curves_) {
    if (c.degree != 2) continue;
    bool all = true;
    for (PointId p : pts) {
      auto it = c.mults.find(p);
      if (it == c.mults.end() || it->second <= 0) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

AgpReport Configuration::almost_general_position(const std::set<PointId>& pts) const {
  for (PointId p : pts) require_point(p);
  AgpReport report;
  if (!is_pre_consistent(pts)) {
    report.ok = false;
    report.violation = AgpViolation::NotPreConsistent;
    for (PointId p : pts)
      for (PointId parent : parents(p))
        if (!pts.count(parent)) {
          report.witness = {p, parent};
          return report;
        }
  }
  // Four aligned / seven on a conic: scan declared curves.
  for (const CurveRecord& c : curves_) {
    std::vector<PointId> on;
    for (PointId p : pts) {
      auto it = c.mults.find(p);
      if (it != c.mults.end() && it->second > 0) on.push_back(p);
    }
    if (c.degree == 1 && on.size() >= 4) {
      report.ok = false;
      report.violation = AgpViolation::Aligned4;
      report.witness = on;
      return report;
    }
    if (c.degree == 2 && on.size() >= 7) {
      report.ok = false;
      report.violation = AgpViolation::ConicSeven;
      report.witness = on;
      return report;
    }
  }
  // Two points of pts adherent to a common third point.
  std::map<PointId, std::vector<PointId>> per_parent;
  for (PointId p : pts)
    for (PointId parent : parents(p)) per_parent[parent].push_back(p);
  for (auto& [parent, kids] : per_parent) {
    if (kids.size() >= 2) {
      report.ok = false;
      report.violation = AgpViolation::TwoAdherent;
      report.witness = {kids[0], kids[1], parent};
      return report;
    }
  }
  return report;
}

bool Configuration::adherence_acyclic() const {
  // Parents always precede children in creation order, so id order is a
  // topological order; verify it.
  for (const PointRecord& rec : points_)
    for (PointId parent : rec.parents)
      if (!(parent < rec.id)) return false;
  return true;
}

}  // namespace cremona
