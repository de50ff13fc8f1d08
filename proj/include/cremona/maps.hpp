#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/classes.hpp"
#include "cremona/config.hpp"

namespace cremona {

/// Characteristic matrix of a plane Cremona map f of degree d with base
/// points p_j (multiplicities m_j) and inverse base points q_i
/// (multiplicities m'_i). The action on classes reads off the matrix:
///   f(L)     = d*L   - sum_i m'_i    E_{q_i}
///   f(E_p_j) = m_j*L - sum_i a[i][j] E_{q_i}
/// Points outside the base locus are carried by the partial pushforward
/// map, which auto-extends with fresh image points on demand.
struct CharMatrix {
  std::int64_t d = 1;
  std::vector<PointId> base_pts;
  std::vector<std::int64_t> m;
  std::vector<PointId> inv_base_pts;
  std::vector<std::int64_t> m_prime;
  std::vector<std::vector<std::int64_t>> a;  // a[i][j], rows follow inv_base_pts
  std::map<PointId, PointId> pushforward;

  std::size_t r() const { return base_pts.size(); }
  /// (d; m_0, ..., m_{r-1}) with multiplicities sorted descending.
  std::vector<std::int64_t> characteristic() const;
  /// Index of a base point of maximal multiplicity (ties by point id).
  std::size_t max_index() const;
  bool is_jonquieres_characteristic() const;

  /// Class f(L) of the image of a line.
  PMClass image_of_line() const;
  /// Class f(E_{p_j}).
  PMClass column_class(std::size_t j) const;
  /// Class f^{-1}(L) = d*L - sum_j m_j E_{p_j}.
  PMClass inverse_image_of_line() const;
};

struct CheckResult {
  int id = 0;
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::vector<int> failing() const;
};

/// Runs the eight multiplicative identities every characteristic matrix
/// satisfies (the Noether equations and the column pairings), plus two
/// derived bounds: d >= 4 implies r >= 6, and r <= 8 implies d <= 17.
ValidationReport validate_characteristic(const CharMatrix& M);

/// Weighted excess positivity of (base_pts, m): at every base point the
/// multiplicity dominates the sum over adherent base points.
bool base_excess_positive(const CharMatrix& M, const Configuration& config,
                          bool inverse_side = false);

/// Quadratic map with the given base triple. The triple must be
/// pre-consistent, not aligned, and no two of its points adherent to
/// the third. Inverse base points are created fresh, mirroring the
/// adherence structure of the sources, unless supplied.
CharMatrix quadratic(Configuration& config, PointId p0, PointId p1, PointId p2,
                     std::optional<std::vector<PointId>> inverse_pts = std::nullopt);

/// De Jonquieres map of degree delta+1 with maximal base point p0 and
/// 2*delta small base points. Supported shapes: exactly delta of the
/// smalls adherent to p0 (with no pair of smalls aligned with p0 and no
/// two smalls adherent to a common third point other than p0), or all
/// smalls generic roots with no pair aligned with p0.
CharMatrix jonquieres(Configuration& config, PointId p0, const std::vector<PointId>& smalls);

/// Symmetric map (all base multiplicities equal) of degree d in
/// {2, 5, 8, 17} on r = 3, 6, 7, 8 base points in almost general
/// position. Creates fresh generic base points when none are given.
CharMatrix symmetric_map(Configuration& config, std::int64_t d,
                         std::optional<std::vector<PointId>> pts = std::nullopt);

/// Identity matrix (degree 1, empty base locus).
CharMatrix identity_matrix();

/// Swaps the two sides and transposes the pairing block.
CharMatrix inverse(const CharMatrix& M);

/// Extends M.pushforward to cover x (and whatever ancestors that
/// needs), creating fresh image points in config. Points adherent to a
/// base point are placed on the image of that point's strict
/// exceptional divisor: adherent to the image carrier when the divisor
/// is contracted, or on a freshly declared principal curve otherwise.
PointId push_point(CharMatrix& M, Configuration& config, PointId x);

/// Action of M on a class: degree' = n*d - sum_j mult(p_j) m_j, image
/// multiplicities n*m'_i - sum_j mult(p_j) a[i][j], non-base support
/// carried by the pushforward. Preserves the intersection form and the
/// anti-canonical pairing.
PMClass apply(CharMatrix& M, const PMClass& c, Configuration& config);

/// Composition g.f computed at the class level: base points are the
/// support of (g.f)^{-1}(L), columns are g(f(E_p)), and columns whose
/// image is purely exceptional drop into the pushforward.
CharMatrix compose(CharMatrix& G, CharMatrix& F, Configuration& config);

struct MajorReport {
  Rat complexity;            // (d - m_0) / 2
  PointId max_point;         // chosen maximal base point
  std::vector<PointId> majors;
  std::size_t h() const { return majors.size(); }
};

/// Complexity (d - m0)/2 and the base points whose multiplicity
/// strictly exceeds it. Both are invariant under the choice of maximal
/// base point; ties are broken by point id.
MajorReport majors_and_complexity(const CharMatrix& M);

/// One degree-decreasing step: a de Jonquieres map J with maximal base
/// point the maximal base point of M and small points among the majors
/// of M, together with M' = M . J^{-1} of strictly smaller degree.
/// Throws StepUnavailable when no supported-shape J exists.
std::pair<CharMatrix, CharMatrix> castelnuovo_step(Configuration& config, CharMatrix M);

}  // namespace cremona
