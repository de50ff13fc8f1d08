#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cremona/config.hpp"
#include "cremona/rat.hpp"

namespace cremona {

/// A Picard-Manin class with finite support, written
///   c = degree * L - sum_p mult(p) * E_p
/// where L is the class of a line and the E_p are the exceptional
/// classes (self-intersection -1, pairwise orthogonal). Multiplicities
/// are stored sparsely; zero entries are never kept. Values are exact
/// rationals and hyperboloid representatives stay unnormalized, so all
/// predicates downstream are scale-invariant by construction.
class PMClass {
 public:
  PMClass() = default;
  explicit PMClass(Rat degree) : degree_(std::move(degree)) {}
  PMClass(Rat degree, std::map<PointId, Rat> mults);

  /// The class of a line.
  static PMClass line() { return PMClass(Rat(1)); }
  /// The exceptional class E_p (degree 0, coefficient +1 on E_p, i.e.
  /// multiplicity -1 in the sign convention above).
  static PMClass exceptional(PointId p);

  const Rat& degree() const { return degree_; }
  const std::map<PointId, Rat>& mults() const { return mults_; }
  Rat mult(PointId p) const;
  void set_mult(PointId p, const Rat& value);
  std::vector<PointId> support() const;

  PMClass& operator+=(const PMClass& other);
  PMClass& operator-=(const PMClass& other);
  PMClass& operator*=(const Rat& scalar);
  friend PMClass operator+(PMClass a, const PMClass& b) { return a += b; }
  friend PMClass operator-(PMClass a, const PMClass& b) { return a -= b; }
  friend PMClass operator*(const Rat& s, PMClass a) { return a *= s; }
  bool operator==(const PMClass& other) const = default;

 private:
  Rat degree_ = 0;
  std::map<PointId, Rat> mults_;
};

/// Intersection form: n1*n2 - sum_p mult1(p)*mult2(p). Symmetric and
/// bilinear; signature (1, infinity).
Rat intersect(const PMClass& a, const PMClass& b);

inline Rat self_intersect(const PMClass& c) { return intersect(c, c); }

/// Pairing against the anti-canonical class 3L - sum E_p, i.e.
/// 3n - sum_p mult(p).
Rat anti_canonical(const PMClass& c);

/// mult(p) minus the sum of mult over points adherent to p.
Rat excess(const PMClass& c, const Configuration& config, PointId p);

/// Multiplicities sorted descending, ties broken by point id.
std::vector<std::pair<PointId, Rat>> order_multiplicities(const PMClass& c);

/// Sum of the k largest multiplicities (missing entries count as 0).
Rat top_mult_sum(const PMClass& c, int k);

enum class DistanceOrder { CloserToFirst, Equidistant, CloserToSecond };

/// Compares the hyperbolic distances dist(c,a) vs dist(c,b) exactly on
/// unnormalized representatives: (c.a)^2 * b^2 against (c.b)^2 * a^2.
/// Requires positive self-intersections and positive pairings.
DistanceOrder cmp_dist(const PMClass& c, const PMClass& a, const PMClass& b);

/// True iff the class lies on the boundary at infinity: zero
/// self-intersection with positive degree.
bool is_boundary(const PMClass& c);

}  // namespace cremona
