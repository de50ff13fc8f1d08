#pragma once

// Shared fixtures for the test suites: deterministic random generators,
// the worked-example configurations, and an independent brute-force
// oracle for the de Jonquieres small-point subset test.

#include <cstdint>
#include <random>
#include <vector>

#include "cremona/cells.hpp"
#include "cremona/maps.hpp"

namespace cremona::testing {

using Rng = std::mt19937_64;

inline std::vector<PointId> add_roots(Configuration& config, int n) {
  std::vector<PointId> out;
  for (int i = 0; i < n; ++i) out.push_back(config.add_point({}));
  return out;
}

// Two free points adherent to a plane point, plus the cubic through the
// three of them (multiplicity 2 at the carrier).
struct AdherentPairFixture {
  Configuration config;
  PointId p0, p1, p2;

  AdherentPairFixture() {
    p0 = config.add_point({});
    p1 = config.add_point({p0});
    p2 = config.add_point({p0});
    config.declare_curve(3, {{p0, 2}, {p1, 1}, {p2, 1}});
  }

  PMClass class_a() const { return PMClass{Rat(7), {{p0, 4}, {p1, 2}, {p2, 2}}}; }
  PMClass class_b() const { return PMClass{Rat(7), {{p0, 4}, {p1, 3}, {p2, 1}}}; }
};

inline Rat random_rat(Rng& rng, long max_num, long max_den = 6) {
  std::uniform_int_distribution<long> num(0, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rat random_nonzero_rat(Rng& rng, long max_num, long max_den = 6) {
  for (;;) {
    Rat q = random_rat(rng, max_num, max_den);
    if (q != 0) return q;
  }
}

// A random class supported on the given points (plus nothing else).
// Multiplicities are bounded so the class usually lands in E when the
// configuration carries the pairwise lines of any quadratic acting on
// it; callers filter with in_E.
inline PMClass random_class(Rng& rng, const std::vector<PointId>& pts, long degree_max = 12) {
  std::uniform_int_distribution<long> deg(2, degree_max);
  Rat n(deg(rng));
  PMClass c{n};
  for (PointId p : pts) {
    Rat lambda = random_rat(rng, deg(rng) / 2 + 1);
    if (3 * lambda > n) lambda = n / 3;
    c.set_mult(p, lambda);
  }
  return c;
}

// Independent re-implementation of the small-point subset test: full
// enumeration, conditions checked directly from the definitions.
struct OracleResult {
  bool violated = false;
  Rat best_violation = 0;
};

inline OracleResult oracle_subset_search(const PMClass& c, const Configuration& config,
                                         PointId p0) {
  std::vector<PointId> cand;
  for (const auto& [p, v] : c.mults())
    if (p != p0) cand.push_back(p);
  const std::size_t k = cand.size();
  const Rat gap = c.degree() - c.mult(p0);
  OracleResult out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<PointId> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(cand[i]);

    bool admissible = true;
    // Pre-consistent together with p0.
    for (PointId s : subset) {
      for (PointId parent : config.parents(s)) {
        if (parent == p0) continue;
        if (std::find(subset.begin(), subset.end(), parent) == subset.end()) admissible = false;
      }
    }
    // No pair aligned with p0.
    for (std::size_t i = 0; i < subset.size() && admissible; ++i)
      for (std::size_t j = i + 1; j < subset.size() && admissible; ++j)
        if (config.aligned({p0, subset[i], subset[j]})) admissible = false;
    // No two adherent to a common third point other than p0.
    for (std::size_t i = 0; i < subset.size() && admissible; ++i)
      for (std::size_t j = i + 1; j < subset.size() && admissible; ++j)
        for (PointId x : config.parents(subset[i])) {
          if (x == p0) continue;
          if (config.adherent(subset[j], x)) admissible = false;
        }
    if (!admissible) continue;

    std::size_t adherent = 0;
    Rat sum = 0;
    for (PointId s : subset) {
      if (config.adherent(s, p0)) ++adherent;
      sum += c.mult(s);
    }
    std::size_t delta = std::max(adherent, subset.size() - adherent);
    Rat value = sum - Rat(static_cast<long>(delta)) * gap;
    if (value > out.best_violation) out.best_violation = value;
    if (value > 0) out.violated = true;
  }
  return out;
}

}  // namespace cremona::testing
