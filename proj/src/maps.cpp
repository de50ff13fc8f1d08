#include "cremona/maps.hpp"

#include <algorithm>
#include <numeric>

namespace cremona {

namespace {

std::int64_t rat_to_int64(const Rat& q, const char* what) {
  if (q.get_den() != 1)
    throw Error(ErrorCode::ValidationFailure, std::string(what) + " is not an integer");
  if (!q.get_num().fits_slong_p())
    throw Error(ErrorCode::ValidationFailure, std::string(what) + " overflows");
  return q.get_num().get_si();
}

// Creates fresh points mirroring the adherence structure of sources
// within the given set. sources[i] maps to the i-th returned point.
std::vector<PointId> mirror_points(Configuration& config, const std::vector<PointId>& sources) {
  std::map<PointId, std::size_t> pos;
  for (std::size_t i = 0; i < sources.size(); ++i) pos[sources[i]] = i;
  std::vector<PointId> images(sources.size(), PointId{});
  // Point ids are created parents-first, so id order is usable as a
  // topological order over the mirrored set.
  std::vector<std::size_t> order(sources.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sources[a] < sources[b]; });
  for (std::size_t idx : order) {
    std::vector<PointId> image_parents;
    for (PointId parent : config.parents(sources[idx])) {
      auto it = pos.find(parent);
      if (it == pos.end())
        throw Error(ErrorCode::NotPreConsistent,
                    "support contains a point whose carrier is outside the set");
      image_parents.push_back(images[it->second]);
    }
    images[idx] = config.add_point(image_parents);
  }
  return images;
}

// Bezout check of the homaloidal class d*L - sum m_j E_{p_j} against
// every declared curve.
void check_homaloidal_bezout(const Configuration& config, const CharMatrix& M, bool inverse_side) {
  const auto& pts = inverse_side ? M.inv_base_pts : M.base_pts;
  const auto& mult = inverse_side ? M.m_prime : M.m;
  for (std::size_t ci = 0; ci < config.curve_count(); ++ci) {
    const CurveRecord& c = config.curve(ci);
    std::int64_t pairing = M.d * c.degree;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      auto it = c.mults.find(pts[j]);
      if (it != c.mults.end()) pairing -= mult[j] * it->second;
    }
    if (pairing < 0) {
      if (c.degree == 1)
        throw Error(ErrorCode::AlignedSupport,
                    "base points meet a declared line too often for the degree");
      throw Error(ErrorCode::ValidationFailure,
                  "base points violate Bezout against a declared curve");
    }
  }
}

void check_constructed(const Configuration& config, const CharMatrix& M) {
  if (!base_excess_positive(M, config, false) || !base_excess_positive(M, config, true))
    throw Error(ErrorCode::ExcessViolation, "base-point excesses are negative");
  check_homaloidal_bezout(config, M, false);
  check_homaloidal_bezout(config, M, true);
  ValidationReport report = validate_characteristic(M);
  if (!report.all_pass())
    throw Error(ErrorCode::ValidationFailure, "constructed matrix fails its identities");
}

}  // namespace

std::vector<std::int64_t> CharMatrix::characteristic() const {
  std::vector<std::int64_t> out;
  out.push_back(d);
  std::vector<std::int64_t> sorted = m;
  std::sort(sorted.rbegin(), sorted.rend());
  out.insert(out.end(), sorted.begin(), sorted.end());
  return out;
}

std::size_t CharMatrix::max_index() const {
  if (base_pts.empty())
    throw Error(ErrorCode::ValidationFailure, "matrix has no base points");
  std::size_t best = 0;
  for (std::size_t j = 1; j < base_pts.size(); ++j) {
    if (m[j] > m[best] || (m[j] == m[best] && base_pts[j] < base_pts[best])) best = j;
  }
  return best;
}

bool CharMatrix::is_jonquieres_characteristic() const {
  if (d == 1) return true;
  if (base_pts.empty()) return false;
  return m[max_index()] == d - 1;
}

PMClass CharMatrix::image_of_line() const {
  PMClass c{Rat(d)};
  for (std::size_t i = 0; i < inv_base_pts.size(); ++i)
    c.set_mult(inv_base_pts[i], c.mult(inv_base_pts[i]) + m_prime[i]);
  return c;
}

PMClass CharMatrix::column_class(std::size_t j) const {
  PMClass c{Rat(m[j])};
  for (std::size_t i = 0; i < inv_base_pts.size(); ++i)
    c.set_mult(inv_base_pts[i], c.mult(inv_base_pts[i]) + a[i][j]);
  return c;
}

PMClass CharMatrix::inverse_image_of_line() const {
  PMClass c{Rat(d)};
  for (std::size_t j = 0; j < base_pts.size(); ++j)
    c.set_mult(base_pts[j], c.mult(base_pts[j]) + m[j]);
  return c;
}

bool ValidationReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<int> ValidationReport::failing() const {
  std::vector<int> out;
  for (const CheckResult& c : checks)
    if (!c.pass) out.push_back(c.id);
  return out;
}

ValidationReport validate_characteristic(const CharMatrix& M) {
  const std::size_t r = M.base_pts.size();
  if (M.m.size() != r || M.inv_base_pts.size() != r || M.m_prime.size() != r ||
      M.a.size() != r)
    throw Error(ErrorCode::ValidationFailure, "characteristic matrix dimensions disagree");
  for (const auto& row : M.a)
    if (row.size() != r)
      throw Error(ErrorCode::ValidationFailure, "characteristic matrix dimensions disagree");

  ValidationReport report;
  auto add = [&](int id, bool pass, std::string detail) {
    report.checks.push_back({id, pass, std::move(detail)});
  };

  bool nonneg = M.d >= 1;
  for (std::size_t j = 0; j < r; ++j) {
    if (M.m[j] <= 0 || M.m_prime[j] <= 0) nonneg = false;
    for (std::size_t i = 0; i < r; ++i)
      if (M.a[i][j] < 0) nonneg = false;
  }
  add(0, nonneg, "positive degree and multiplicities, nonnegative pairing block");

  std::int64_t sum_m = std::accumulate(M.m.begin(), M.m.end(), std::int64_t{0});
  add(1, sum_m == 3 * M.d - 3, "sum m_i = 3d-3");

  std::int64_t sum_m2 = 0;
  for (std::int64_t v : M.m) sum_m2 += v * v;
  add(2, sum_m2 == M.d * M.d - 1, "sum m_i^2 = d^2-1");

  bool bounded = true;
  for (std::int64_t v : M.m)
    if (v > M.d - 1) bounded = false;
  add(3, bounded, "m_i <= d-1");

  bool jonq_shape = true;
  if (r > 0) {
    std::vector<std::int64_t> sorted = M.m;
    std::sort(sorted.rbegin(), sorted.rend());
    if (sorted[0] == M.d - 1 && M.d >= 2) {
      jonq_shape = (static_cast<std::int64_t>(r) == 2 * M.d - 1);
      for (std::size_t j = 1; j < r && jonq_shape; ++j) jonq_shape = (sorted[j] == 1);
    }
  }
  add(4, jonq_shape, "m_0 = d-1 forces characteristic (d; d-1, 1^{2d-2})");

  bool eq5 = true, eq6 = true, eq7 = true, eq8 = true;
  for (std::size_t j = 0; j < r; ++j) {
    std::int64_t col = 0, col2 = 0, mixed = 0;
    for (std::size_t i = 0; i < r; ++i) {
      col += M.a[i][j];
      col2 += M.a[i][j] * M.a[i][j];
      mixed += M.m_prime[i] * M.a[i][j];
    }
    if (col != 3 * M.m[j] - 1) eq5 = false;
    if (col2 != M.m[j] * M.m[j] + 1) eq6 = false;
    if (mixed != M.d * M.m[j]) eq8 = false;
    for (std::size_t k = j + 1; k < r; ++k) {
      std::int64_t dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += M.a[i][j] * M.a[i][k];
      if (dot != M.m[j] * M.m[k]) eq7 = false;
    }
  }
  add(5, eq5, "sum_i a_ij = 3 m_j - 1");
  add(6, eq6, "sum_i a_ij^2 = m_j^2 + 1");
  add(7, eq7, "sum_i a_ij a_ik = m_j m_k");
  add(8, eq8, "sum_i m'_i a_ij = d m_j");

  add(9, M.d < 4 || static_cast<std::int64_t>(r) >= 6, "d >= 4 forces r >= 6");
  add(10, static_cast<std::int64_t>(r) > 8 || M.d <= 17, "r <= 8 forces d <= 17");
  return report;
}

bool base_excess_positive(const CharMatrix& M, const Configuration& config, bool inverse_side) {
  const auto& pts = inverse_side ? M.inv_base_pts : M.base_pts;
  const auto& mult = inverse_side ? M.m_prime : M.m;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    std::int64_t childs = 0;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (k != j && config.adherent(pts[k], pts[j])) childs += mult[k];
    if (mult[j] < childs) return false;
  }
  return true;
}

CharMatrix identity_matrix() { return CharMatrix{}; }

CharMatrix quadratic(Configuration& config, PointId p0, PointId p1, PointId p2,
                     std::optional<std::vector<PointId>> inverse_pts) {
  std::vector<PointId> pts{p0, p1, p2};
  for (PointId p : pts) config.require_point(p);
  if (p0 == p1 || p0 == p2 || p1 == p2)
    throw Error(ErrorCode::ValidationFailure, "quadratic base points must be distinct");
  std::set<PointId> triple(pts.begin(), pts.end());
  if (!config.is_pre_consistent(triple))
    throw Error(ErrorCode::NotPreConsistent, "quadratic support is not pre-consistent");
  if (config.aligned(triple))
    throw Error(ErrorCode::AlignedSupport, "three aligned points do not support a quadratic map");
  for (PointId carrier : pts) {
    int kids = 0;
    for (PointId other : pts)
      if (other != carrier && config.adherent(other, carrier)) ++kids;
    if (kids >= 2)
      throw Error(ErrorCode::AdherencePairViolation,
                  "a quadratic map cannot have two base points adherent to the third");
  }

  CharMatrix M;
  M.d = 2;
  M.base_pts = pts;
  M.m = {1, 1, 1};
  M.m_prime = {1, 1, 1};
  M.a = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  if (inverse_pts) {
    if (inverse_pts->size() != 3)
      throw Error(ErrorCode::ValidationFailure, "a quadratic needs three inverse base points");
    for (PointId q : *inverse_pts) config.require_point(q);
    M.inv_base_pts = *inverse_pts;
  } else {
    M.inv_base_pts = mirror_points(config, pts);
  }
  check_constructed(config, M);
  return M;
}

CharMatrix jonquieres(Configuration& config, PointId p0, const std::vector<PointId>& smalls) {
  config.require_point(p0);
  for (PointId s : smalls) config.require_point(s);
  if (smalls.size() < 2 || smalls.size() % 2 != 0)
    throw Error(ErrorCode::ShapeUnsupported, "need an even number (>= 2) of small base points");
  const std::int64_t delta = static_cast<std::int64_t>(smalls.size()) / 2;
  const std::int64_t d = delta + 1;

  std::set<PointId> all{p0};
  for (PointId s : smalls) {
    if (s == p0 || !all.insert(s).second)
      throw Error(ErrorCode::ValidationFailure, "small base points must be distinct from each other and p0");
  }
  if (!config.is_pre_consistent(all))
    throw Error(ErrorCode::NotPreConsistent, "support is not pre-consistent");
  if (!config.is_root(p0))
    throw Error(ErrorCode::ShapeUnsupported, "the maximal base point must be a point of the plane");

  std::int64_t adherent_count = 0;
  bool all_roots = true;
  for (PointId s : smalls) {
    if (config.adherent(s, p0)) ++adherent_count;
    if (!config.is_root(s)) all_roots = false;
  }
  const bool shape_tower = (adherent_count == delta);
  const bool shape_generic = (adherent_count == 0 && all_roots);
  if (!shape_tower && !shape_generic)
    throw Error(ErrorCode::ShapeUnsupported,
                "need exactly delta small points adherent to the maximal point, or all smalls generic");

  // No pair of smalls aligned with p0.
  for (std::size_t i = 0; i < smalls.size(); ++i)
    for (std::size_t j = i + 1; j < smalls.size(); ++j)
      if (config.aligned({p0, smalls[i], smalls[j]}))
        throw Error(ErrorCode::AlignedWithMaximal,
                    "two small base points are aligned with the maximal base point");
  // No two points of the set adherent to a common third point != p0.
  for (PointId x : all) {
    if (x == p0) continue;
    int kids = 0;
    for (PointId s : smalls)
      if (s != x && config.adherent(s, x)) ++kids;
    if (kids >= 2)
      throw Error(ErrorCode::AdherencePairViolation,
                  "two small base points adherent to a common point other than the maximal one");
  }

  CharMatrix M;
  M.d = d;
  M.base_pts.push_back(p0);
  M.base_pts.insert(M.base_pts.end(), smalls.begin(), smalls.end());
  M.m.assign(M.base_pts.size(), 1);
  M.m[0] = d - 1;
  M.m_prime = M.m;
  std::vector<PointId> sources = M.base_pts;
  M.inv_base_pts = mirror_points(config, sources);

  const std::size_t r = M.base_pts.size();
  M.a.assign(r, std::vector<std::int64_t>(r, 0));
  M.a[0][0] = d - 2;
  for (std::size_t i = 1; i < r; ++i) {
    M.a[i][0] = 1;
    M.a[0][i] = 1;
    M.a[i][i] = 1;
  }
  check_constructed(config, M);
  return M;
}

CharMatrix symmetric_map(Configuration& config, std::int64_t d,
                         std::optional<std::vector<PointId>> pts) {
  std::size_t r;
  std::int64_t diag, off;
  switch (d) {
    case 2: r = 3; diag = 0; off = 1; break;
    case 5: r = 6; diag = 0; off = 1; break;
    case 8: r = 7; diag = 2; off = 1; break;
    case 17: r = 8; diag = 3; off = 2; break;
    default:
      throw Error(ErrorCode::ShapeUnsupported, "symmetric maps exist only in degrees 2, 5, 8, 17");
  }
  const std::int64_t mult = (d + 1) / 3;

  CharMatrix M;
  M.d = d;
  if (pts) {
    if (pts->size() != r)
      throw Error(ErrorCode::ShapeUnsupported, "wrong number of base points for this degree");
    for (PointId p : *pts) config.require_point(p);
    M.base_pts = *pts;
  } else {
    for (std::size_t i = 0; i < r; ++i) M.base_pts.push_back(config.add_point({}));
  }
  M.m.assign(r, mult);
  M.m_prime = M.m;
  M.inv_base_pts = mirror_points(config, M.base_pts);
  M.a.assign(r, std::vector<std::int64_t>(r, off));
  for (std::size_t i = 0; i < r; ++i) M.a[i][i] = diag;
  check_constructed(config, M);
  return M;
}

CharMatrix inverse(const CharMatrix& M) {
  CharMatrix out;
  out.d = M.d;
  out.base_pts = M.inv_base_pts;
  out.m = M.m_prime;
  out.inv_base_pts = M.base_pts;
  out.m_prime = M.m;
  const std::size_t r = M.base_pts.size();
  out.a.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) out.a[i][j] = M.a[j][i];
  for (const auto& [x, y] : M.pushforward) out.pushforward[y] = x;
  return out;
}

PointId push_point(CharMatrix& M, Configuration& config, PointId x) {
  auto it = M.pushforward.find(x);
  if (it != M.pushforward.end()) return it->second;
  for (PointId b : M.base_pts)
    if (b == x)
      throw Error(ErrorCode::UndefinedPushforward, "base points have no pushforward image");

  std::vector<PointId> image_parents;
  std::vector<PMClass> incidences;  // positive-degree principal curves carrying the image
  for (PointId parent : config.parents(x)) {
    auto base_it = std::find(M.base_pts.begin(), M.base_pts.end(), parent);
    if (base_it == M.base_pts.end()) {
      image_parents.push_back(push_point(M, config, parent));
      continue;
    }
    // x sits on the strict transform of the exceptional divisor of a
    // base point. Its image lies on the image of that divisor: compute
    // the class of the strict exceptional divisor under the action.
    std::size_t j = static_cast<std::size_t>(base_it - M.base_pts.begin());
    PMClass sigma = M.column_class(j);
    for (std::size_t k = 0; k < M.base_pts.size(); ++k)
      if (k != j && config.adherent(M.base_pts[k], M.base_pts[j])) sigma -= M.column_class(k);
    if (sigma.degree() == 0) {
      // Contracted onto an exceptional divisor on the target side: the
      // carrier is the unique entry with coefficient +1 on E.
      PointId carrier{};
      int carriers = 0;
      bool consistent = true;
      for (const auto& [q, v] : sigma.mults()) {
        if (v == -1) {
          carrier = q;
          ++carriers;
        } else if (v != 1) {
          consistent = false;
        }
      }
      if (carriers != 1 || !consistent)
        throw Error(ErrorCode::ValidationFailure, "inconsistent strict exceptional image");
      image_parents.push_back(carrier);
    } else {
      incidences.push_back(sigma);
    }
  }
  std::sort(image_parents.begin(), image_parents.end());
  image_parents.erase(std::unique(image_parents.begin(), image_parents.end()),
                      image_parents.end());
  PointId image = config.add_point(image_parents);
  for (const PMClass& sigma : incidences) {
    std::map<PointId, int> mults;
    for (const auto& [q, v] : sigma.mults()) {
      std::int64_t value = rat_to_int64(v, "principal curve multiplicity");
      if (value < 0)
        throw Error(ErrorCode::ValidationFailure, "principal curve with negative multiplicity");
      if (value > 0) mults[q] = static_cast<int>(value);
    }
    int degree = static_cast<int>(rat_to_int64(sigma.degree(), "principal curve degree"));
    if (degree == 1) {
      std::set<PointId> on;
      for (const auto& [q, v] : mults) on.insert(q);
      if (auto line = config.aligned_line(on)) {
        config.add_curve_point(*line, image, 1);
        continue;
      }
    }
    mults[image] = 1;
    config.declare_curve(degree, mults);
  }
  M.pushforward[x] = image;
  return image;
}

PMClass apply(CharMatrix& M, const PMClass& c, Configuration& config) {
  const std::size_t r = M.base_pts.size();
  std::vector<Rat> base_mult(r, Rat(0));
  for (std::size_t j = 0; j < r; ++j) base_mult[j] = c.mult(M.base_pts[j]);

  Rat degree = c.degree() * M.d;
  for (std::size_t j = 0; j < r; ++j) degree -= base_mult[j] * M.m[j];
  PMClass out{degree};
  for (std::size_t i = 0; i < r; ++i) {
    Rat v = c.degree() * M.m_prime[i];
    for (std::size_t j = 0; j < r; ++j) v -= base_mult[j] * M.a[i][j];
    out.set_mult(M.inv_base_pts[i], out.mult(M.inv_base_pts[i]) + v);
  }
  for (const auto& [p, v] : c.mults()) {
    if (std::find(M.base_pts.begin(), M.base_pts.end(), p) != M.base_pts.end()) continue;
    PointId image = push_point(M, config, p);
    out.set_mult(image, out.mult(image) + v);
  }
  return out;
}

namespace {

void merge_inverse_pushforward(CharMatrix& M, const CharMatrix& Minv) {
  for (const auto& [x, y] : Minv.pushforward)
    if (!M.pushforward.count(y)) M.pushforward[y] = x;
}

}  // namespace

CharMatrix compose(CharMatrix& G, CharMatrix& F, Configuration& config) {
  // Base locus of H = G.F from H^{-1}(L) = F^{-1}(G^{-1}(L)).
  CharMatrix Finv = inverse(F);
  PMClass u = apply(Finv, G.inverse_image_of_line(), config);
  merge_inverse_pushforward(F, Finv);
  PMClass v = apply(G, apply(F, PMClass::line(), config), config);
  if (u.degree() != v.degree())
    throw Error(ErrorCode::ValidationFailure, "composition degrees disagree");

  CharMatrix H;
  H.d = rat_to_int64(u.degree(), "composite degree");
  if (H.d < 1) throw Error(ErrorCode::ValidationFailure, "composite degree must be positive");

  auto sorted_support = [](const PMClass& c) {
    std::vector<std::pair<PointId, Rat>> entries = order_multiplicities(c);
    return entries;
  };
  for (const auto& [p, mult] : sorted_support(u)) {
    std::int64_t value = rat_to_int64(mult, "composite base multiplicity");
    if (value <= 0)
      throw Error(ErrorCode::ValidationFailure, "composite base multiplicity must be positive");
    H.base_pts.push_back(p);
    H.m.push_back(value);
  }
  for (const auto& [q, mult] : sorted_support(v)) {
    std::int64_t value = rat_to_int64(mult, "composite inverse multiplicity");
    if (value <= 0)
      throw Error(ErrorCode::ValidationFailure, "composite inverse multiplicity must be positive");
    H.inv_base_pts.push_back(q);
    H.m_prime.push_back(value);
  }
  if (H.base_pts.size() != H.inv_base_pts.size())
    throw Error(ErrorCode::ValidationFailure, "composite base loci have different sizes");

  const std::size_t r = H.base_pts.size();
  H.a.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    PMClass w = apply(G, apply(F, PMClass::exceptional(H.base_pts[j]), config), config);
    if (w.degree() != H.m[j])
      throw Error(ErrorCode::ValidationFailure, "composite column degree disagrees");
    PMClass residue = w;
    for (std::size_t i = 0; i < r; ++i) {
      Rat entry = w.mult(H.inv_base_pts[i]);
      H.a[i][j] = rat_to_int64(entry, "composite pairing entry");
      residue.set_mult(H.inv_base_pts[i], 0);
    }
    if (!residue.mults().empty())
      throw Error(ErrorCode::ValidationFailure, "composite column has support off the base locus");
  }

  // Pushforward: chain F then G where nothing cancels; base points of F
  // whose composite column is purely exceptional drop to the
  // pushforward (the cancellation case).
  std::set<PointId> g_base(G.base_pts.begin(), G.base_pts.end());
  for (const auto& [x, y] : F.pushforward) {
    if (g_base.count(y)) continue;  // x became a base point of H
    H.pushforward[x] = push_point(G, config, y);
  }
  for (std::size_t j = 0; j < F.base_pts.size(); ++j) {
    PMClass w = apply(G, apply(F, PMClass::exceptional(F.base_pts[j]), config), config);
    if (w.degree() != 0) continue;
    PointId target{};
    bool found = false;
    bool clean = true;
    for (const auto& [q, value] : w.mults()) {
      if (value == -1 && !found) {
        target = q;
        found = true;
      } else {
        clean = false;
      }
    }
    if (!found || !clean)
      throw Error(ErrorCode::ValidationFailure, "cancelled column is not purely exceptional");
    H.pushforward[F.base_pts[j]] = target;
  }

  ValidationReport report = validate_characteristic(H);
  if (!report.all_pass())
    throw Error(ErrorCode::ValidationFailure, "composite matrix fails its identities");
  return H;
}

MajorReport majors_and_complexity(const CharMatrix& M) {
  std::size_t j0 = M.max_index();
  MajorReport report{Rat(M.d - M.m[j0]) / 2, M.base_pts[j0], {}};
  report.complexity.canonicalize();
  std::vector<std::size_t> order(M.base_pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (M.m[a] != M.m[b]) return M.m[a] > M.m[b];
    return M.base_pts[a] < M.base_pts[b];
  });
  for (std::size_t j : order) {
    if (j == j0) continue;
    if (Rat(M.m[j]) > report.complexity) report.majors.push_back(M.base_pts[j]);
  }
  return report;
}

std::pair<CharMatrix, CharMatrix> castelnuovo_step(Configuration& config, CharMatrix M) {
  if (M.d <= 1)
    throw Error(ErrorCode::StepUnavailable, "degree is already 1");
  MajorReport majors = majors_and_complexity(M);
  PointId p0 = majors.max_point;

  std::vector<PointId> adherent, distant;
  for (PointId p : majors.majors) {
    if (config.adherent(p, p0))
      adherent.push_back(p);
    else
      distant.push_back(p);
  }

  std::vector<PointId> smalls;
  if (!adherent.empty()) {
    const std::size_t delta = adherent.size();
    if (distant.size() < delta)
      throw Error(ErrorCode::StepUnavailable,
                  "fewer non-adherent majors than adherent ones");
    smalls = adherent;
    smalls.insert(smalls.end(), distant.begin(), distant.begin() + delta);
  } else {
    const std::size_t count = majors.majors.size() - majors.majors.size() % 2;
    if (count < 2)
      throw Error(ErrorCode::StepUnavailable, "not enough major base points");
    smalls.assign(majors.majors.begin(), majors.majors.begin() + count);
  }

  CharMatrix J;
  try {
    J = jonquieres(config, p0, smalls);
  } catch (const Error& e) {
    throw Error(ErrorCode::StepUnavailable,
                std::string("no supported de Jonquieres germ on the majors: ") + e.what());
  }
  CharMatrix Jinv = inverse(J);
  CharMatrix reduced = compose(M, Jinv, config);
  merge_inverse_pushforward(J, Jinv);
  if (reduced.d >= M.d)
    throw Error(ErrorCode::ValidationFailure, "precomposition did not decrease the degree");
  return {J, reduced};
}

}  // namespace cremona
