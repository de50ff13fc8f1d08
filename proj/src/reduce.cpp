#include "cremona/reduce.hpp"

#include <algorithm>
#include <sstream>

namespace cremona {

namespace {

std::size_t count_adherent(const Configuration& config, const std::vector<PointId>& pts,
                           PointId p0) {
  std::size_t n = 0;
  for (PointId p : pts)
    if (config.adherent(p, p0)) ++n;
  return n;
}

}  // namespace

std::optional<CharMatrix> violating_map(const PMClass& c, Configuration& config) {
  MembershipReport report = in_V_id(c, config);
  if (report.verdict) return std::nullopt;

  if (report.violated == ConditionTag::TopTriple) {
    const auto& t = report.witness_set;
    return quadratic(config, t[0], t[1], t[2]);
  }

  // Special class: pad the worst subset to a supported de Jonquieres
  // shape with fresh generic points.
  PointId p0 = order_multiplicities(c).front().first;
  std::vector<PointId> smalls = report.witness_set;
  std::size_t adherent = count_adherent(config, smalls, p0);
  std::size_t distant = smalls.size() - adherent;
  const std::size_t delta = std::max<std::size_t>(std::max(adherent, distant), 1);
  while (adherent < delta) {
    smalls.push_back(config.add_point({p0}));
    ++adherent;
  }
  while (distant < delta) {
    smalls.push_back(config.add_point({}));
    ++distant;
  }
  return jonquieres(config, p0, smalls);
}

ReductionTrace voronoi_reduce(const PMClass& c, Configuration& config) {
  ReductionTrace trace;
  trace.terminal = c;
  Rat value = c.degree();
  // Diagnostic guard; descent strictly decreases a value bounded below.
  mpz_class whole = value.get_num() / value.get_den();
  long cap = 10 * whole.get_si() + 20;
  while (true) {
    std::optional<CharMatrix> germ = violating_map(trace.terminal, config);
    if (!germ) break;
    trace.terminal = apply(*germ, trace.terminal, config);
    if (!(trace.terminal.degree() < value))
      throw Error(ErrorCode::ValidationFailure, "descent step failed to decrease the degree");
    value = trace.terminal.degree();
    trace.steps.push_back({*germ, value});
    if (static_cast<long>(trace.steps.size()) > cap)
      throw Error(ErrorCode::IterationCap, "descent exceeded the iteration guard");
  }
  trace.terminal_report = in_V_id(trace.terminal, config);
  return trace;
}

std::string GermDescriptor::label(const Configuration& config) const {
  auto names = [&](const std::vector<PointId>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += ",";
      out += config.name(pts[i]);
    }
    return out;
  };
  switch (kind) {
    case Kind::Identity: return "id";
    case Kind::Quadratic: return "quad(" + names(points) + ")";
    case Kind::QuadraticFamily: return "quad(" + names(points) + ",*)";
    case Kind::Jonquieres:
      return "jonq[d=" + std::to_string(degree) + "](" + config.name(max_point) + ";" +
             names(points) + ")";
    case Kind::JonquieresFamily:
      return "jonq-family[d=" + std::to_string(degree) + "](" + config.name(max_point) + ";" +
             names(points) + ",*)";
    case Kind::JonquieresPool:
      return "jonq-pool[d=" + std::to_string(degree) + "](" + config.name(max_point) + ";" +
             names(points) + ")";
    case Kind::SymmetricFamily: return "sym(" + names(points) + ")";
  }
  return "id";
}

std::vector<GermDescriptor> owning_cells(const PMClass& c, const Configuration& config) {
  MembershipReport membership = in_V_id(c, config);
  if (!membership.verdict)
    throw Error(ErrorCode::NotInVId, "owning cells are enumerated from inside the identity cell");

  std::vector<GermDescriptor> out;
  out.push_back({GermDescriptor::Kind::Identity, PointId{}, {}, 1});

  auto ordered = order_multiplicities(c);
  const Rat n = c.degree();
  if (ordered.empty()) return out;

  if (is_special(c, config)) {
    PointId p0 = ordered.front().first;
    SubsetSearchResult search = jonquieres_subset_search(c, config, p0, true);
    for (const auto& subset : search.tight_subsets) {
      std::size_t adherent = count_adherent(config, subset, p0);
      std::size_t distant = subset.size() - adherent;
      std::size_t delta = std::max<std::size_t>(std::max(adherent, distant), 1);
      GermDescriptor desc;
      desc.max_point = p0;
      desc.degree = static_cast<int>(delta) + 1;
      if (subset.size() == 2 * delta) {
        if (delta == 1) {
          desc.kind = GermDescriptor::Kind::Quadratic;
          desc.points.push_back(p0);
          desc.points.insert(desc.points.end(), subset.begin(), subset.end());
        } else {
          desc.kind = GermDescriptor::Kind::Jonquieres;
          desc.points = subset;
        }
      } else if (delta == 1) {
        desc.kind = GermDescriptor::Kind::QuadraticFamily;
        desc.points.push_back(p0);
        desc.points.insert(desc.points.end(), subset.begin(), subset.end());
      } else {
        desc.kind = GermDescriptor::Kind::JonquieresFamily;
        desc.points = subset;
      }
      out.push_back(std::move(desc));
    }
    return out;
  }

  // Two-point tight support: infinitely many quadratic germs.
  if (ordered.size() == 2 && ordered[0].second + ordered[1].second == n) {
    GermDescriptor desc;
    desc.kind = GermDescriptor::Kind::QuadraticFamily;
    desc.points = {ordered[0].first, ordered[1].first};
    desc.degree = 2;
    out.push_back(std::move(desc));
  }

  // Tight top triples supporting a quadratic map.
  if (ordered.size() >= 3 && top_mult_sum(c, 3) == n) {
    for (const auto& triple : admissible_top_triples(c)) {
      if (classify_triple(config, triple[0], triple[1], triple[2]) ==
          TripleKind::QuadraticSupport) {
        GermDescriptor desc;
        desc.kind = GermDescriptor::Kind::Quadratic;
        desc.points = triple;
        desc.degree = 2;
        out.push_back(std::move(desc));
      }
    }
  }

  // De Jonquieres block shape: one maximal point, every other support
  // point of multiplicity (n - mult(p0)) / 2.
  const Rat max_value = ordered.front().second;
  for (const auto& [p0, value] : ordered) {
    if (value != max_value) break;
    Rat v = (n - value) / 2;
    v.canonicalize();
    if (v <= 0) continue;
    bool clean = true;
    std::vector<PointId> block;
    for (const auto& [p, lambda] : ordered) {
      if (p == p0) continue;
      if (lambda > v) {
        clean = false;
        break;
      }
      if (lambda == v) block.push_back(p);
    }
    if (!clean || block.size() < 4) continue;
    for (std::size_t count = 4; count <= block.size(); count += 2) {
      GermDescriptor desc;
      desc.max_point = p0;
      desc.degree = static_cast<int>(count) / 2 + 1;
      if (count == block.size()) {
        // Only emit the concrete germ when the support shape exists.
        Configuration scratch = config;
        try {
          jonquieres(scratch, p0, block);
        } catch (const Error&) {
          continue;
        }
        desc.kind = GermDescriptor::Kind::Jonquieres;
        desc.points = block;
      } else {
        desc.kind = GermDescriptor::Kind::JonquieresPool;
        desc.points = block;
      }
      out.push_back(std::move(desc));
    }
  }

  // Symmetric loci: maximal multiplicity exactly a third of the degree.
  if (3 * max_value == n) {
    std::vector<PointId> top;
    for (const auto& [p, value] : ordered)
      if (value == max_value) top.push_back(p);
    for (std::size_t r = 6; r <= 8 && r <= top.size(); ++r) {
      std::vector<bool> pick(top.size(), false);
      std::fill(pick.begin(), pick.begin() + r, true);
      do {
        std::vector<PointId> subset;
        for (std::size_t i = 0; i < top.size(); ++i)
          if (pick[i]) subset.push_back(top[i]);
        std::set<PointId> as_set(subset.begin(), subset.end());
        if (config.almost_general_position(as_set).ok) {
          GermDescriptor desc;
          desc.kind = GermDescriptor::Kind::SymmetricFamily;
          desc.points = subset;
          desc.degree = static_cast<int>(r);
          out.push_back(std::move(desc));
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return out;
}

std::vector<SampleReport> segment_scan(const PMClass& a, const PMClass& b, Configuration& config,
                                       int samples) {
  if (samples < 2)
    throw Error(ErrorCode::HypothesisViolated, "a segment scan needs at least two samples");
  if (!in_E(a, config).verdict || !in_E(b, config).verdict)
    throw Error(ErrorCode::NotInE, "segment endpoints must lie in E");

  std::vector<SampleReport> out;
  for (int k = 0; k < samples; ++k) {
    Rat t(k, samples - 1);
    t.canonicalize();
    PMClass u = (Rat(1) - t) * a + t * b;
    if (self_intersect(u) <= 0)
      throw Error(ErrorCode::NonPositiveClass, "segment sample left the positive cone");
    ReductionTrace trace = voronoi_reduce(u, config);
    out.push_back({t, trace.steps, owning_cells(trace.terminal, config)});
  }
  return out;
}

std::string region_signature(const SampleReport& sample, const Configuration& config) {
  std::ostringstream sig;
  sig << "w[";
  for (std::size_t s = 0; s < sample.word.size(); ++s) {
    const CharMatrix& germ = sample.word[s].germ;
    if (s) sig << "|";
    sig << germ.d << ";";
    std::vector<std::pair<std::int64_t, std::string>> entries;
    for (std::size_t j = 0; j < germ.base_pts.size(); ++j) {
      // Fresh points born inside the scan would make signatures
      // spuriously distinct, so only the first step names its points.
      entries.push_back({-germ.m[j], s == 0 ? config.name(germ.base_pts[j]) : std::string()});
    }
    std::sort(entries.begin(), entries.end());
    for (const auto& [negm, name] : entries) sig << -negm << "@" << name << " ";
  }
  sig << "]o[";
  for (const GermDescriptor& desc : sample.owning) {
    if (sample.word.empty()) {
      sig << desc.label(config) << " ";
    } else {
      sig << static_cast<int>(desc.kind) << ":" << desc.degree << ":" << desc.points.size()
          << " ";
    }
  }
  sig << "]";
  return sig.str();
}

}  // namespace cremona
