#include "cremona/cells.hpp"

#include <algorithm>
#include <numeric>

namespace cremona {

const char* condition_tag_name(ConditionTag tag) {
  switch (tag) {
    case ConditionTag::None: return "None";
    case ConditionTag::NegativeMult: return "NegativeMult";
    case ConditionTag::AntiCanonical: return "AntiCanonical";
    case ConditionTag::Excess: return "Excess";
    case ConditionTag::Bezout: return "Bezout";
    case ConditionTag::TopTriple: return "TopTriple";
    case ConditionTag::JonquieresWitness: return "JonquieresWitness";
  }
  return "None";
}

const char* adjacency_class_name(AdjacencyClass c) {
  switch (c) {
    case AdjacencyClass::JonquieresCharacteristic: return "JonquieresCharacteristic";
    case AdjacencyClass::AlmostGeneralAtMost8: return "AlmostGeneral<=8";
    case AdjacencyClass::AlmostGeneral9Only: return "AlmostGeneral9Only";
    case AdjacencyClass::NotAdjacent: return "NotAdjacent";
    case AdjacencyClass::NotQuasiAdjacent: return "NotQuasiAdjacent";
  }
  return "NotAdjacent";
}

const char* boundary_class_kind_name(BoundaryClassKind k) {
  switch (k) {
    case BoundaryClassKind::OneSymmetricPure: return "OneSymmetricPure";
    case BoundaryClassKind::NineSymmetricPure: return "NineSymmetricPure";
    case BoundaryClassKind::SpecialCandidate: return "SpecialCandidate";
    case BoundaryClassKind::NotBoundary: return "NotBoundary";
  }
  return "NotBoundary";
}

MembershipReport check_E_conditions(const PMClass& c, const Configuration& config) {
  MembershipReport report;

  for (const auto& [p, v] : c.mults()) {
    config.require_point(p);
    if (v < 0) {
      report.verdict = false;
      report.violated = ConditionTag::NegativeMult;
      report.witness_point = p;
      report.slack = v;
      return report;
    }
  }

  Rat ac = anti_canonical(c);
  if (ac < 0) {
    report.verdict = false;
    report.violated = ConditionTag::AntiCanonical;
    report.slack = ac;
    return report;
  }

  std::set<PointId> excess_points;
  for (const auto& [p, v] : c.mults()) {
    excess_points.insert(p);
    for (PointId parent : config.parents(p)) excess_points.insert(parent);
  }
  for (PointId p : excess_points) {
    Rat e = excess(c, config, p);
    if (e < 0) {
      report.verdict = false;
      report.violated = ConditionTag::Excess;
      report.witness_point = p;
      report.slack = e;
      return report;
    }
  }

  for (std::size_t ci = 0; ci < config.curve_count(); ++ci) {
    const CurveRecord& curve = config.curve(ci);
    Rat pairing = c.degree() * curve.degree;
    for (const auto& [p, mu] : curve.mults) pairing -= c.mult(p) * mu;
    if (pairing < 0) {
      report.verdict = false;
      report.violated = ConditionTag::Bezout;
      report.witness_curve = ci;
      report.slack = pairing;
      return report;
    }
  }
  return report;
}

MembershipReport in_E(const PMClass& c, const Configuration& config) {
  if (self_intersect(c) <= 0 || c.degree() <= 0)
    throw Error(ErrorCode::NonPositiveClass,
                "membership wants a representative with positive self-intersection and degree");
  return check_E_conditions(c, config);
}

TripleKind classify_triple(const Configuration& config, PointId a, PointId b, PointId c) {
  std::set<PointId> triple{a, b, c};
  if (triple.size() != 3)
    throw Error(ErrorCode::ValidationFailure, "triple points must be distinct");
  if (config.aligned(triple)) return TripleKind::Aligned;
  for (PointId center : triple) {
    int kids = 0;
    for (PointId other : triple)
      if (other != center && config.adherent(other, center)) ++kids;
    if (kids == 2) return TripleKind::AdherentPair;
  }
  if (config.is_pre_consistent(triple)) return TripleKind::QuadraticSupport;
  return TripleKind::Unsupported;
}

std::vector<std::vector<PointId>> admissible_top_triples(const PMClass& c) {
  auto ordered = order_multiplicities(c);
  std::vector<std::vector<PointId>> out;
  if (ordered.size() < 3) return out;
  const Rat v3 = ordered[2].second;
  std::vector<PointId> mandatory, optional;
  for (const auto& [p, v] : ordered) {
    if (v > v3)
      mandatory.push_back(p);
    else if (v == v3)
      optional.push_back(p);
  }
  const std::size_t need = 3 - mandatory.size();  // between 1 and 3
  std::vector<std::size_t> idx(need);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<PointId> triple = mandatory;
    for (std::size_t i : idx) triple.push_back(optional[i]);
    out.push_back(triple);
    std::size_t j = need;
    while (j > 0 && idx[j - 1] == optional.size() - need + (j - 1)) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t t = j; t < need; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

bool is_special(const PMClass& c, const Configuration& config) {
  if (c.mults().size() < 3) return false;
  if (c.degree() >= top_mult_sum(c, 3)) return false;
  for (const auto& triple : admissible_top_triples(c)) {
    TripleKind kind = classify_triple(config, triple[0], triple[1], triple[2]);
    if (kind == TripleKind::Aligned || kind == TripleKind::QuadraticSupport) return false;
  }
  return true;
}

SubsetSearchResult jonquieres_subset_search(const PMClass& c, const Configuration& config,
                                            PointId p0, bool collect_tight) {
  config.require_point(p0);
  const Rat gap = c.degree() - c.mult(p0);

  // Candidates: support minus p0, in id order. Points are created
  // carriers-first, so id order is topological and the pre-consistency
  // closure can be enforced while descending.
  struct Candidate {
    PointId p;
    Rat mult;
    bool adherent_to_p0;
  };
  std::vector<Candidate> cand;
  for (const auto& [p, v] : c.mults())
    if (p != p0) cand.push_back({p, v, config.adherent(p, p0)});

  const std::size_t k = cand.size();
  // Pairwise incompatibilities: aligned with p0, or a shared carrier
  // other than p0 (a point is adherent to at most two points, so "two
  // points adherent to a common third" means a shared parent).
  std::vector<std::vector<bool>> bad(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool incompatible = config.aligned({p0, cand[i].p, cand[j].p});
      if (!incompatible) {
        for (PointId x : config.parents(cand[i].p))
          if (x != p0 && config.adherent(cand[j].p, x)) incompatible = true;
      }
      bad[i][j] = bad[j][i] = incompatible;
    }
  // Pre-consistency closure: including a point requires its parents
  // (other than p0), which precede it in id order.
  std::vector<std::vector<std::size_t>> required(k);
  std::map<PointId, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[cand[i].p] = i;
  for (std::size_t i = 0; i < k; ++i)
    for (PointId parent : config.parents(cand[i].p)) {
      if (parent == p0) continue;
      auto it = index.find(parent);
      if (it == index.end())
        throw Error(ErrorCode::NotPreConsistent, "support is not closed under carriers");
      required[i].push_back(it->second);
    }

  std::vector<Rat> suffix(k + 1, Rat(0));
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] + cand[i].mult;

  SubsetSearchResult result;
  std::vector<std::size_t> chosen;
  std::vector<bool> in_set(k, false);

  auto value_of = [&](const Rat& sum, std::size_t adh, std::size_t size) -> Rat {
    const std::size_t delta = std::max(adh, size - adh);
    return sum - Rat(static_cast<long>(delta)) * gap;
  };

  auto record = [&](const Rat& sum, std::size_t adh) {
    if (chosen.empty()) return;
    Rat value = value_of(sum, adh, chosen.size());
    std::vector<PointId> pts;
    pts.reserve(chosen.size());
    for (std::size_t i : chosen) pts.push_back(cand[i].p);
    std::sort(pts.begin(), pts.end());
    if (value > result.best_violation) {
      result.best_violation = value;
      result.best_subset = pts;
    }
    if (value > 0) result.violated = true;
    if (collect_tight && value == 0) result.tight_subsets.push_back(pts);
  };

  // Depth-first over candidates in order; every subset is recorded
  // exactly once, when its largest element is included. Prune when even
  // taking every remaining multiplicity cannot reach a nonnegative
  // value (max(a, s-a) never decreases when adding points, and is at
  // least 1 on nonempty sets).
  auto dfs = [&](auto&& self, std::size_t i, Rat sum, std::size_t adh) -> void {
    if (i == k) return;
    if (gap >= 0) {
      const std::size_t delta_now =
          std::max<std::size_t>(chosen.empty() ? 1 : std::max(adh, chosen.size() - adh), 1);
      Rat best_possible = sum + suffix[i] - Rat(static_cast<long>(delta_now)) * gap;
      if (best_possible < 0) return;
    }
    // Include cand[i] if compatible.
    bool ok = true;
    for (std::size_t j : chosen)
      if (bad[i][j]) ok = false;
    if (ok)
      for (std::size_t need : required[i])
        if (!in_set[need]) ok = false;
    if (ok) {
      chosen.push_back(i);
      in_set[i] = true;
      Rat next_sum = sum + cand[i].mult;
      std::size_t next_adh = adh + (cand[i].adherent_to_p0 ? 1 : 0);
      record(next_sum, next_adh);
      self(self, i + 1, next_sum, next_adh);
      chosen.pop_back();
      in_set[i] = false;
    }
    self(self, i + 1, sum, adh);
  };
  dfs(dfs, 0, Rat(0), 0);
  return result;
}

MembershipReport in_V_id(const PMClass& c, const Configuration& config) {
  MembershipReport e = in_E(c, config);
  if (!e.verdict)
    throw Error(ErrorCode::NotInE,
                std::string("class is outside E (") + condition_tag_name(e.violated) + ")");

  MembershipReport report;
  const Rat top3 = top_mult_sum(c, 3);
  if (c.mults().size() < 3 || c.degree() >= top3) return report;

  auto triples = admissible_top_triples(c);
  std::vector<PointId> quadratic_triple;
  for (const auto& triple : triples) {
    TripleKind kind = classify_triple(config, triple[0], triple[1], triple[2]);
    if (kind == TripleKind::Aligned) return report;  // Bezout already forced n >= top3
    if (kind == TripleKind::QuadraticSupport && quadratic_triple.empty())
      quadratic_triple = triple;
  }
  if (!quadratic_triple.empty()) {
    report.verdict = false;
    report.violated = ConditionTag::TopTriple;
    report.witness_set = quadratic_triple;
    report.slack = c.degree() - top3;
    return report;
  }

  // Special class: quantify over de Jonquieres maps with maximal base
  // point the maximal support point, via the padded subset test.
  PointId p0 = order_multiplicities(c).front().first;
  SubsetSearchResult search = jonquieres_subset_search(c, config, p0);
  if (search.violated) {
    report.verdict = false;
    report.violated = ConditionTag::JonquieresWitness;
    report.witness_set = search.best_subset;
    report.slack = -search.best_violation;
  }
  return report;
}

bool in_cell(const PMClass& c, const Configuration& config, const CharMatrix& F) {
  Configuration scratch = config;
  CharMatrix Finv = inverse(F);
  PMClass pulled = apply(Finv, c, scratch);
  return in_V_id(pulled, scratch).verdict;
}

AdjacencyClass adjacency_classify(const CharMatrix& F, const Configuration& config) {
  if (F.is_jonquieres_characteristic()) return AdjacencyClass::JonquieresCharacteristic;
  const std::size_t r = F.r();
  if (r <= 8) {
    std::set<PointId> inv(F.inv_base_pts.begin(), F.inv_base_pts.end());
    std::set<PointId> base(F.base_pts.begin(), F.base_pts.end());
    if (config.almost_general_position(inv).ok && config.almost_general_position(base).ok) {
      if (F.d > 17)
        throw Error(ErrorCode::ValidationFailure, "an adjacent germ would exceed degree 17");
      return AdjacencyClass::AlmostGeneralAtMost8;
    }
  }
  return AdjacencyClass::NotAdjacent;
}

AdjacencyClass quasi_adjacency_classify(const CharMatrix& F, const Configuration& config) {
  AdjacencyClass adjacent = adjacency_classify(F, config);
  if (adjacent != AdjacencyClass::NotAdjacent) return adjacent;
  if (F.r() == 9) {
    std::set<PointId> inv(F.inv_base_pts.begin(), F.inv_base_pts.end());
    std::set<PointId> base(F.base_pts.begin(), F.base_pts.end());
    if (config.almost_general_position(inv).ok && config.almost_general_position(base).ok)
      return AdjacencyClass::AlmostGeneral9Only;
  }
  return AdjacencyClass::NotQuasiAdjacent;
}

std::optional<PMClass> intersection_witness(const CharMatrix& F, const Configuration& config) {
  AdjacencyClass kind = adjacency_classify(F, config);
  PMClass witness;
  if (kind == AdjacencyClass::JonquieresCharacteristic) {
    witness = PMClass{Rat(F.d + 1)};
    if (F.r() > 0) {
      std::size_t q0 = 0;
      for (std::size_t i = 1; i < F.r(); ++i)
        if (F.m_prime[i] > F.m_prime[q0] ||
            (F.m_prime[i] == F.m_prime[q0] && F.inv_base_pts[i] < F.inv_base_pts[q0]))
          q0 = i;
      for (std::size_t i = 0; i < F.r(); ++i)
        witness.set_mult(F.inv_base_pts[i], i == q0 ? Rat(F.d - 1) : Rat(1));
    }
  } else if (kind == AdjacencyClass::AlmostGeneralAtMost8) {
    witness = PMClass{Rat(3)};
    for (PointId q : F.inv_base_pts) witness.set_mult(q, 1);
  } else {
    return std::nullopt;
  }
  if (!in_V_id(witness, config).verdict || !in_cell(witness, config, F))
    throw Error(ErrorCode::ValidationFailure, "intersection witness failed verification");
  return witness;
}

namespace {

bool nine_symmetric_pure(const PMClass& c) {
  if (c.mults().size() != 9 || !(c.degree() > 0) || self_intersect(c) != 0) return false;
  const Rat& first = c.mults().begin()->second;
  for (const auto& [p, v] : c.mults())
    if (v != first) return false;
  return true;
}

}  // namespace

BoundaryClassKind boundary_classify(const PMClass& c, const Configuration& config) {
  if (!(c.degree() > 0) || self_intersect(c) != 0)
    throw Error(ErrorCode::NotBoundaryClass,
                "boundary classes have zero self-intersection and positive degree");
  if (!check_E_conditions(c, config).verdict) return BoundaryClassKind::NotBoundary;
  if (c.mults().size() == 1) return BoundaryClassKind::OneSymmetricPure;
  if (nine_symmetric_pure(c)) {
    std::set<PointId> supp;
    for (PointId p : c.support()) supp.insert(p);
    if (config.almost_general_position(supp).ok) return BoundaryClassKind::NineSymmetricPure;
    return BoundaryClassKind::NotBoundary;
  }
  if (is_special(c, config)) return BoundaryClassKind::SpecialCandidate;
  return BoundaryClassKind::NotBoundary;
}

PMClass boundary_pushforward(CharMatrix& F, const PMClass& c, Configuration& config) {
  if (!nine_symmetric_pure(c))
    throw Error(ErrorCode::NotBoundaryClass, "expected a 9-symmetric pure boundary class");
  for (PointId q : F.inv_base_pts)
    if (c.mult(q) == 0)
      throw Error(ErrorCode::SupportNotContained,
                  "a base point of the inverse lies outside the class support");
  CharMatrix Finv = inverse(F);
  PMClass image = apply(Finv, c, config);
  for (const auto& [x, y] : Finv.pushforward)
    if (!F.pushforward.count(y)) F.pushforward[y] = x;
  if (!nine_symmetric_pure(image))
    throw Error(ErrorCode::ValidationFailure, "image is not 9-symmetric pure");
  return image;
}

std::optional<PMClass> common_boundary(const CharMatrix& F, const CharMatrix& G,
                                       Configuration& config) {
  if (F.is_jonquieres_characteristic() && G.is_jonquieres_characteristic() && F.r() > 0 &&
      G.r() > 0) {
    auto maximal_points = [](const CharMatrix& M) {
      std::set<PointId> out;
      std::int64_t best = *std::max_element(M.m_prime.begin(), M.m_prime.end());
      for (std::size_t i = 0; i < M.r(); ++i)
        if (M.m_prime[i] == best) out.insert(M.inv_base_pts[i]);
      return out;
    };
    std::set<PointId> shared;
    std::set<PointId> mf = maximal_points(F);
    for (PointId p : maximal_points(G))
      if (mf.count(p)) shared.insert(p);
    if (!shared.empty()) {
      PMClass witness = PMClass::line();
      witness.set_mult(*shared.begin(), 1);
      return witness;
    }
  }
  std::set<PointId> join(F.inv_base_pts.begin(), F.inv_base_pts.end());
  join.insert(G.inv_base_pts.begin(), G.inv_base_pts.end());
  if (join.size() <= 9 && config.almost_general_position(join).ok) {
    while (join.size() < 9) join.insert(config.add_point({}));
    PMClass witness{Rat(3)};
    for (PointId p : join) witness.set_mult(p, 1);
    if (boundary_classify(witness, config) != BoundaryClassKind::NineSymmetricPure)
      throw Error(ErrorCode::ValidationFailure, "completed boundary witness failed verification");
    return witness;
  }
  return std::nullopt;
}

SymmetricBound symmetric_r_bound(const PMClass& c, const Configuration& config) {
  Rat c2 = self_intersect(c);
  if (c2 < 0 || !(c.degree() > 0))
    throw Error(ErrorCode::NonPositiveClass, "negative self-intersection");
  auto ordered = order_multiplicities(c);
  if (ordered.empty() || 3 * ordered.front().second != c.degree())
    throw Error(ErrorCode::HypothesisViolated,
                "maximal multiplicity must be exactly a third of the degree");
  if (!check_E_conditions(c, config).verdict)
    throw Error(ErrorCode::HypothesisViolated, "class fails the membership conditions");
  SymmetricBound bound;
  for (const auto& [p, v] : ordered)
    if (v == ordered.front().second) ++bound.r;
  bound.pure = (bound.r == static_cast<int>(ordered.size()));
  bound.boundary = (c2 == 0);
  if (!bound.boundary && bound.r > 8)
    throw Error(ErrorCode::ValidationFailure, "interior class with nine maximal multiplicities");
  if (bound.boundary && !(bound.r == 9 && bound.pure))
    throw Error(ErrorCode::ValidationFailure, "boundary class is not 9-symmetric pure");
  return bound;
}

}  // namespace cremona
