#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/cells.hpp"

namespace cremona {

/// One descent step: the germ applied to the class, and the degree
/// value c . L after the step.
struct ReductionStep {
  CharMatrix germ;
  Rat value;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;  // values strictly decreasing
  PMClass terminal;                  // lies in the identity cell
  MembershipReport terminal_report;
};

/// A germ strictly decreasing c . L, or nothing when c already lies in
/// the identity cell. For a non-special violation this is the quadratic
/// map on the worst top triple; for a special one the de Jonquieres map
/// on the worst small-point subset, padded to a supported shape with
/// fresh generic points.
std::optional<CharMatrix> violating_map(const PMClass& c, Configuration& config);

/// Repeated descent until the class lands in the identity cell. The
/// composed inverse word of the recorded germs identifies a cell
/// containing the input class.
ReductionTrace voronoi_reduce(const PMClass& c, Configuration& config);

/// Descriptor of a cell germ (or family of germs) containing a class.
struct GermDescriptor {
  enum class Kind {
    Identity,
    Quadratic,          // concrete quadratic, inverse base = points
    QuadraticFamily,    // quadratics with inverse base {points[0], points[1], any}
    Jonquieres,         // concrete de Jonquieres germ, inverse max = max_point
    JonquieresFamily,   // required small points plus free padded slots
    JonquieresPool,     // any 2(degree-1) small points from the pool
    SymmetricFamily,    // non-Jonquieres germs with this inverse base locus
  };
  Kind kind = Kind::Identity;
  PointId max_point;            // de Jonquieres kinds
  std::vector<PointId> points;  // triple / smalls / required set / pool / locus
  int degree = 1;

  std::string label(const Configuration& config) const;
};

/// Germs of all cells containing a class of the identity cell, from the
/// finite case analysis: tight top triples supporting a quadratic map,
/// tight de Jonquieres subsets (families when fresh padding is
/// involved), and symmetric loci when the maximal multiplicity is a
/// third of the degree. Two-point tight supports yield a family
/// descriptor rather than an infinite list.
std::vector<GermDescriptor> owning_cells(const PMClass& c, const Configuration& config);

/// One sample of a segment scan: parameter, the reduction word that
/// brought the sample into the identity cell, and the owning germs of
/// the terminal class.
struct SampleReport {
  Rat parameter;
  std::vector<ReductionStep> word;
  std::vector<GermDescriptor> owning;
};

/// Evaluates affine combinations (1-t) a + t b at `samples` evenly
/// spaced rational parameters, reduces each into the identity cell and
/// reports the owning germs. The number of distinct region signatures
/// along the segment is finite.
std::vector<SampleReport> segment_scan(const PMClass& a, const PMClass& b,
                                       Configuration& config, int samples);

/// Canonical signature of a sample for region counting: germ
/// characteristics with source base points, owning descriptors with
/// point names only when no reduction happened.
std::string region_signature(const SampleReport& sample, const Configuration& config);

}  // namespace cremona
