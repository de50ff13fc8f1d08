#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cremona/classes.hpp"
#include "cremona/config.hpp"
#include "cremona/maps.hpp"

namespace cremona {

enum class ConditionTag {
  None,
  NegativeMult,
  AntiCanonical,
  Excess,
  Bezout,
  TopTriple,
  JonquieresWitness,
};

const char* condition_tag_name(ConditionTag tag);

/// Verdict plus, on failure, the first violated condition with a
/// witness that can be re-checked independently.
struct MembershipReport {
  bool verdict = true;
  ConditionTag violated = ConditionTag::None;
  std::optional<PointId> witness_point;
  std::optional<std::size_t> witness_curve;
  std::vector<PointId> witness_set;  // triple or small-point subset
  Rat slack = 0;                     // signed margin of the violated inequality
};

/// The four membership conditions for the convex set E cut out by
/// nonnegative multiplicities, anti-canonical positivity, excess
/// positivity and Bezout against every declared curve. Scale-invariant;
/// c must have positive self-intersection.
MembershipReport in_E(const PMClass& c, const Configuration& config);

/// The same four conditions without any constraint on c^2 (used for
/// boundary classes).
MembershipReport check_E_conditions(const PMClass& c, const Configuration& config);

enum class TripleKind { Aligned, AdherentPair, QuadraticSupport, Unsupported };

/// Classifies a support triple: carried by a declared line; two of the
/// points adherent to the third; a valid quadratic support; or not
/// pre-consistent on its own.
TripleKind classify_triple(const Configuration& config, PointId a, PointId b, PointId c);

/// All 3-subsets of the support that can occupy the top three positions
/// of some ordering compatible with descending multiplicities.
std::vector<std::vector<PointId>> admissible_top_triples(const PMClass& c);

/// Ordered class whose two next-largest multiplicity points are
/// adherent to the maximal one, with degree below the top-three sum.
/// Tie handling: any tie-admissible aligned or quadratic-support top
/// triple disqualifies.
bool is_special(const PMClass& c, const Configuration& config);

/// Result of the de Jonquieres small-point subset search for special
/// classes: the subset maximizing
///   sum_{s in S} mult(s) - max(a_S, |S| - a_S) * (n - mult(p0))
/// over admissible subsets S of the support minus the maximal point.
struct SubsetSearchResult {
  bool violated = false;   // some subset has positive violation
  Rat best_violation = 0;  // max over admissible subsets, clamped below at 0
  std::vector<PointId> best_subset;                 // realizes a positive maximum
  std::vector<std::vector<PointId>> tight_subsets;  // violation exactly 0
};

/// Branch-and-bound search over admissible small-point subsets. An
/// admissible S contains no pair aligned with p0, no two points
/// adherent to a common third other than p0, and is pre-consistent
/// together with p0. Padding with fresh generic points is accounted for
/// by the max(a_S, |S|-a_S) factor.
SubsetSearchResult jonquieres_subset_search(const PMClass& c, const Configuration& config,
                                            PointId p0, bool collect_tight = false);

/// Membership in the Voronoi cell of the identity. Fast accept when the
/// degree dominates the top-three multiplicity sum or the top triple is
/// aligned; otherwise the quadratic criterion for non-special classes
/// and the de Jonquieres subset test for special ones.
MembershipReport in_V_id(const PMClass& c, const Configuration& config);

/// Membership in the cell of F: reduces to in_V_id of the inverse image
/// of c.
bool in_cell(const PMClass& c, const Configuration& config, const CharMatrix& F);

enum class AdjacencyClass {
  JonquieresCharacteristic,
  AlmostGeneralAtMost8,
  AlmostGeneral9Only,
  NotAdjacent,
  NotQuasiAdjacent,
};

const char* adjacency_class_name(AdjacencyClass c);

/// Germs of cells adjacent to the identity cell: de Jonquieres
/// characteristic, or at most 8 base points in almost general position
/// (checked on both sides, which agree for honest geometric data).
AdjacencyClass adjacency_classify(const CharMatrix& F, const Configuration& config);

/// Adds the boundary-at-infinity case: exactly 9 base points in almost
/// general position is quasi-adjacent without being adjacent.
AdjacencyClass quasi_adjacency_classify(const CharMatrix& F, const Configuration& config);

/// A class equidistant from the identity center and from F's center,
/// when the cells are adjacent: the de Jonquieres midpoint class or the
/// symmetric class over the inverse base points.
std::optional<PMClass> intersection_witness(const CharMatrix& F, const Configuration& config);

enum class BoundaryClassKind { OneSymmetricPure, NineSymmetricPure, SpecialCandidate, NotBoundary };

const char* boundary_class_kind_name(BoundaryClassKind k);

/// Classification of boundary classes (zero self-intersection, positive
/// degree, membership conditions): L - E_p, the 9-symmetric pure class
/// on an almost general set, or the unresolved special configuration.
BoundaryClassKind boundary_classify(const PMClass& c, const Configuration& config);

/// Image of the 9-symmetric pure class under F^{-1}; requires the base
/// points of F^{-1} to lie inside the support. The result is again
/// 9-symmetric pure.
PMClass boundary_pushforward(CharMatrix& F, const PMClass& c, Configuration& config);

/// A common boundary-at-infinity class for the cells of F and G, if one
/// exists: L - E_p for a shared maximal inverse base point of two
/// de Jonquieres-characteristic germs, or the 9-symmetric class over
/// the union of inverse base points completed with fresh generic
/// points.
std::optional<PMClass> common_boundary(const CharMatrix& F, const CharMatrix& G,
                                       Configuration& config);

struct SymmetricBound {
  int r = 0;        // number of maximal multiplicities
  bool pure = false;
  bool boundary = false;  // true when c^2 = 0, false when c^2 > 0
};

/// For a class whose maximal multiplicity is exactly a third of its
/// degree: in E the number of maximal multiplicities is at most 8; on
/// the boundary it is exactly 9 and the class is pure.
SymmetricBound symmetric_r_bound(const PMClass& c, const Configuration& config);

}  // namespace cremona
