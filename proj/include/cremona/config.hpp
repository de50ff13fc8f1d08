#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

/// Identifier of a bubble-space point. Creation order defines a total
/// order which is the tie-breaker for every deterministic choice made
/// downstream.
struct PointId {
  std::uint32_t value = UINT32_MAX;

  friend auto operator<=>(const PointId&, const PointId&) = default;
};

/// A point together with the points it is adherent to. 0 parents: a
/// point of the plane. 1 parent: free infinitely near point. 2 parents
/// {p, q}: satellite, which forces one of p, q to be adherent to the
/// other.
struct PointRecord {
  PointId id;
  std::vector<PointId> parents;  // sorted, size <= 2
};

/// A declared plane curve: degree plus multiplicities at configuration
/// points. Incidence is declared data, never computed from coordinates.
struct CurveRecord {
  int degree = 1;
  std::map<PointId, int> mults;  // positive entries only
};

enum class AgpViolation { None, NotPreConsistent, Aligned4, ConicSeven, TwoAdherent };

struct AgpReport {
  bool ok = true;
  AgpViolation violation = AgpViolation::None;
  std::vector<PointId> witness;  // offending points
};

const char* agp_violation_name(AgpViolation v);

/// Finite model of the relevant part of the bubble space of the plane:
/// an adherence forest plus declared curve incidences. Built by
/// mutation, then queried; queries are const and pure.
class Configuration {
 public:
  Configuration() = default;

  /// Adds a point adherent to the given parents (0, 1 or 2 of them).
  PointId add_point(const std::vector<PointId>& parents);
  /// Same, with an explicit unique name (used by file loading).
  PointId add_point_named(const std::string& name, const std::vector<PointId>& parents);

  /// Declares a curve. Degree-1 curves must carry at least two points
  /// and may not duplicate the line through any two already-declared
  /// collinear points. Multiplicities must satisfy excess positivity.
  std::size_t declare_curve(int degree, const std::map<PointId, int>& mults);

  /// Adds a point to an existing curve (the point was found to lie on
  /// it, e.g. as a pushforward image on a principal curve).
  void add_curve_point(std::size_t curve_index, PointId p, int mult);

  std::size_t point_count() const { return points_.size(); }
  std::size_t curve_count() const { return curves_.size(); }
  bool has_point(PointId p) const { return p.value < points_.size(); }
  const PointRecord& point(PointId p) const;
  const CurveRecord& curve(std::size_t index) const;
  const std::string& name(PointId p) const;
  std::optional<PointId> find_point(const std::string& name) const;

  const std::vector<PointId>& parents(PointId p) const;
  /// Points directly adherent to p.
  std::vector<PointId> children(PointId p) const;
  bool adherent(PointId child, PointId parent) const;
  bool is_root(PointId p) const { return parents(p).empty(); }
  /// All strict ancestors of p (points that must be blown up before p).
  std::set<PointId> ancestors(PointId p) const;

  /// True iff pts is closed under taking parents.
  bool is_pre_consistent(const std::set<PointId>& pts) const;

  /// True iff a single declared degree-1 curve carries positive
  /// multiplicity at every point of pts.
  bool aligned(const std::set<PointId>& pts) const;
  /// Index of such a line, if any.
  std::optional<std::size_t> aligned_line(const std::set<PointId>& pts) const;

  /// True iff some declared degree-2 curve carries every point of pts.
  bool on_conic(const std::set<PointId>& pts) const;

  /// Pre-consistent, no 4 aligned, no 7 on a conic, no two points
  /// adherent to a common third.
  AgpReport almost_general_position(const std::set<PointId>& pts) const;

  /// Checks the adherence relation is acyclic (holds by construction;
  /// exposed so the invariant is testable).
  bool adherence_acyclic() const;

  void require_point(PointId p) const;

 private:
  void validate_parents(const std::vector<PointId>& parents) const;
  void validate_curve(const CurveRecord& curve) const;
  std::string fresh_name();

  std::vector<PointRecord> points_;
  std::vector<std::string> names_;
  std::map<std::string, PointId> by_name_;
  std::vector<CurveRecord> curves_;
  std::uint64_t fresh_counter_ = 0;
};

inline const char* agp_violation_name(AgpViolation v) {
  switch (v) {
    case AgpViolation::None: return "None";
    case AgpViolation::NotPreConsistent: return "NotPreConsistent";
    case AgpViolation::Aligned4: return "Aligned4";
    case AgpViolation::ConicSeven: return "ConicSeven";
    case AgpViolation::TwoAdherent: return "TwoAdherent";
  }
  return "None";
}

}  // namespace cremona
