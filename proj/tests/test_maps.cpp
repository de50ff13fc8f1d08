#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/maps.hpp"
#include "support.hpp"

using namespace cremona;
using namespace cremona::testing;

TEST_CASE("validator accepts the symmetric characteristics") {
  Configuration config;
  for (std::int64_t d : {2, 5, 8, 17}) {
    CharMatrix M = symmetric_map(config, d);
    ValidationReport report = validate_characteristic(M);
    CHECK(report.all_pass());
    CHECK(validate_characteristic(inverse(M)).all_pass());
  }
}

TEST_CASE("validator accepts de Jonquieres characteristics up to degree 10") {
  for (int d = 2; d <= 10; ++d) {
    Configuration config;
    PointId p0 = config.add_point({});
    auto smalls = add_roots(config, 2 * d - 2);
    CharMatrix M = jonquieres(config, p0, smalls);
    CHECK(M.d == d);
    CHECK(validate_characteristic(M).all_pass());
  }
}

TEST_CASE("validator rejects (3;2,2,1)") {
  Configuration config;
  auto r = add_roots(config, 6);
  CharMatrix M;
  M.d = 3;
  M.base_pts = {r[0], r[1], r[2]};
  M.m = {2, 2, 1};
  M.inv_base_pts = {r[3], r[4], r[5]};
  M.m_prime = {2, 2, 1};
  M.a = {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  ValidationReport report = validate_characteristic(M);
  CHECK_FALSE(report.all_pass());
  auto failing = report.failing();
  // Identity 1 fails: 5 != 6.
  CHECK(std::find(failing.begin(), failing.end(), 1) != failing.end());
}

TEST_CASE("quadratic constructor") {
  SUBCASE("three generic roots give the standard involution pattern") {
    Configuration config;
    auto r = add_roots(config, 3);
    CharMatrix M = quadratic(config, r[0], r[1], r[2]);
    CHECK(M.d == 2);
    CHECK(M.m == std::vector<std::int64_t>{1, 1, 1});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(M.a[i][j] == (i == j ? 0 : 1));
    CHECK(M.is_jonquieres_characteristic());
  }
  SUBCASE("aligned triples are rejected") {
    Configuration config;
    auto r = add_roots(config, 3);
    config.declare_curve(1, {{r[0], 1}, {r[1], 1}, {r[2], 1}});
    CHECK_THROWS_AS(quadratic(config, r[0], r[1], r[2]), Error);
  }
  SUBCASE("two points adherent to the third are rejected") {
    Configuration config;
    PointId p0 = config.add_point({});
    PointId p1 = config.add_point({p0});
    PointId p2 = config.add_point({p0});
    CHECK_THROWS_AS(quadratic(config, p0, p1, p2), Error);
  }
  SUBCASE("one adherent pair is allowed and mirrored on the inverse") {
    Configuration config;
    PointId p0 = config.add_point({});
    PointId p1 = config.add_point({p0});
    PointId t = config.add_point({});
    CharMatrix M = quadratic(config, p0, p1, t);
    CHECK(config.adherent(M.inv_base_pts[1], M.inv_base_pts[0]));
    CHECK(config.is_root(M.inv_base_pts[2]));
  }
  SUBCASE("non-pre-consistent triples are rejected") {
    Configuration config;
    PointId p0 = config.add_point({});
    PointId p1 = config.add_point({p0});
    auto r = add_roots(config, 2);
    CHECK_THROWS_AS(quadratic(config, p1, r[0], r[1]), Error);
  }
}

TEST_CASE("de Jonquieres constructor shapes") {
  SUBCASE("tower shape: exactly delta points adherent to the maximal one") {
    Configuration config;
    PointId p0 = config.add_point({});
    PointId a = config.add_point({p0});
    PointId b = config.add_point({});
    CharMatrix M = jonquieres(config, p0, {a, b});
    CHECK(M.d == 2);
    CHECK(validate_characteristic(M).all_pass());

    PointId a2 = config.add_point({p0});
    PointId b2 = config.add_point({});
    CharMatrix M3 = jonquieres(config, p0, {a, a2, b, b2});
    CHECK(M3.d == 3);
    CHECK(M3.m[0] == 2);
    CHECK(base_excess_positive(M3, config));
    CHECK(base_excess_positive(M3, config, true));
  }
  SUBCASE("two smalls aligned with the maximal point are rejected") {
    Configuration config;
    PointId p0 = config.add_point({});
    auto r = add_roots(config, 2);
    config.declare_curve(1, {{p0, 1}, {r[0], 1}, {r[1], 1}});
    CHECK_THROWS_AS(jonquieres(config, p0, {r[0], r[1]}), Error);
  }
  SUBCASE("unsupported adherence counts are refused, not guessed") {
    Configuration config;
    PointId p0 = config.add_point({});
    PointId a = config.add_point({p0});
    auto r = add_roots(config, 3);
    // One adherent out of four smalls: neither shape.
    CHECK_THROWS_AS(jonquieres(config, p0, {a, r[0], r[1], r[2]}), Error);
  }
  SUBCASE("two smalls adherent to a common small are rejected") {
    Configuration config;
    PointId p0 = config.add_point({});
    PointId a = config.add_point({p0});
    PointId b = config.add_point({a});
    PointId c = config.add_point({a});
    PointId d = config.add_point({});
    CHECK_THROWS_AS(jonquieres(config, p0, {a, b, c, d}), Error);
  }
}

TEST_CASE("inverse is an involution and keeps shape") {
  Configuration config;
  auto r = add_roots(config, 3);
  CharMatrix M = quadratic(config, r[0], r[1], r[2]);
  CharMatrix MM = inverse(inverse(M));
  CHECK(MM.d == M.d);
  CHECK(MM.base_pts == M.base_pts);
  CHECK(MM.m == M.m);
  CHECK(MM.a == M.a);

  // The standard involution pattern is symmetric under inversion.
  CHECK(inverse(M).a == M.a);

  PointId p0 = config.add_point({});
  auto smalls = add_roots(config, 4);
  CharMatrix J = jonquieres(config, p0, smalls);
  CharMatrix Jinv = inverse(J);
  CHECK(Jinv.is_jonquieres_characteristic());
  CHECK(validate_characteristic(Jinv).all_pass());
}

TEST_CASE("action on classes") {
  Configuration config;
  auto r = add_roots(config, 3);
  CharMatrix sigma = quadratic(config, r[0], r[1], r[2]);

  SUBCASE("sigma on a line") {
    PMClass image = apply(sigma, PMClass::line(), config);
    CHECK(image.degree() == 2);
    for (PointId q : sigma.inv_base_pts) CHECK(image.mult(q) == 1);
  }
  SUBCASE("de Jonquieres on a line") {
    Configuration cfg;
    PointId p0 = cfg.add_point({});
    auto smalls = add_roots(cfg, 6);
    CharMatrix J = jonquieres(cfg, p0, smalls);
    PMClass image = apply(J, PMClass::line(), cfg);
    CHECK(image.degree() == 4);
    CHECK(image.mult(J.inv_base_pts[0]) == 3);
    for (std::size_t i = 1; i < J.inv_base_pts.size(); ++i)
      CHECK(image.mult(J.inv_base_pts[i]) == 1);
  }
  SUBCASE("points off the base locus are carried to fresh points") {
    PointId extra = config.add_point({});
    PMClass image = apply(sigma, PMClass::exceptional(extra), config);
    CHECK(image.degree() == 0);
    REQUIRE(image.mults().size() == 1);
    PointId fresh = image.mults().begin()->first;
    CHECK(fresh != extra);
    CHECK(image.mult(fresh) == -1);
    CHECK(sigma.pushforward.at(extra) == fresh);
  }
  SUBCASE("degree cross-check") {
    PMClass image = apply(sigma, PMClass::line(), config);
    CHECK(intersect(image, PMClass::line()) == sigma.d);
  }
}

TEST_CASE("form preservation and round trips on random classes") {
  Rng rng(1337);
  int done = 0;
  while (done < 200) {
    Configuration config;
    auto r = add_roots(config, 6);
    CharMatrix M;
    if (done % 2) {
      M = quadratic(config, r[0], r[1], r[2]);
    } else {
      M = jonquieres(config, r[0], {r[1], r[2], r[3], r[4]});
    }
    PMClass a = random_class(rng, r);
    PMClass b = random_class(rng, r);
    PMClass fa = apply(M, a, config);
    PMClass fb = apply(M, b, config);
    CHECK(intersect(fa, fb) == intersect(a, b));
    CHECK(anti_canonical(fa) == anti_canonical(a));
    CharMatrix Minv = inverse(M);
    CHECK(apply(Minv, fa, config) == a);
    ++done;
  }
}

TEST_CASE("composition") {
  SUBCASE("a quadratic against its matched inverse is the identity") {
    Configuration config;
    auto r = add_roots(config, 3);
    CharMatrix sigma = quadratic(config, r[0], r[1], r[2]);
    CharMatrix sigma_back = inverse(sigma);
    CharMatrix id = compose(sigma_back, sigma, config);
    CHECK(id.d == 1);
    CHECK(id.r() == 0);
    // The composite acts as the identity on the original base points.
    for (PointId p : sigma.base_pts) CHECK(id.pushforward.at(p) == p);
  }
  SUBCASE("matched base points via supplied inverse points") {
    Configuration config;
    auto r = add_roots(config, 3);
    CharMatrix first = quadratic(config, r[0], r[1], r[2]);
    std::vector<PointId> q = first.inv_base_pts;
    CharMatrix second = quadratic(config, q[0], q[1], q[2],
                                  std::vector<PointId>{r[0], r[1], r[2]});
    CharMatrix id = compose(second, first, config);
    CHECK(id.d == 1);
  }
  SUBCASE("disjoint quadratics compose to degree 4") {
    Configuration config;
    auto r = add_roots(config, 3);
    CharMatrix F = quadratic(config, r[0], r[1], r[2]);
    auto s = add_roots(config, 3);
    CharMatrix G = quadratic(config, s[0], s[1], s[2]);
    CharMatrix H = compose(G, F, config);
    CHECK(H.d == 4);
    CHECK(H.r() == 6);
    CHECK(validate_characteristic(H).all_pass());
    CHECK(H.characteristic() == std::vector<std::int64_t>{4, 2, 2, 2, 1, 1, 1});
  }
  SUBCASE("composition agrees with applying twice") {
    Rng rng(2024);
    Configuration config;
    auto r = add_roots(config, 3);
    CharMatrix F = quadratic(config, r[0], r[1], r[2]);
    auto s = add_roots(config, 3);
    CharMatrix G = quadratic(config, s[0], s[1], s[2]);
    CharMatrix H = compose(G, F, config);
    for (int trial = 0; trial < 50; ++trial) {
      PMClass c = random_class(rng, {r[0], r[1], r[2]});
      PMClass via_h = apply(H, c, config);
      PMClass via_gf = apply(G, apply(F, c, config), config);
      CHECK(intersect(via_h, via_h) == intersect(via_gf, via_gf));
      CHECK(via_h.degree() == via_gf.degree());
    }
  }
  SUBCASE("de Jonquieres times its inverse is the identity") {
    Configuration config;
    PointId p0 = config.add_point({});
    auto smalls = add_roots(config, 4);
    CharMatrix J = jonquieres(config, p0, smalls);
    CharMatrix Jinv = inverse(J);
    CharMatrix id = compose(Jinv, J, config);
    CHECK(id.d == 1);
    CHECK(id.r() == 0);
  }
}

TEST_CASE("majors and complexity") {
  Configuration config;
  auto r = add_roots(config, 3);
  CharMatrix sigma = quadratic(config, r[0], r[1], r[2]);
  MajorReport quad = majors_and_complexity(sigma);
  CHECK(quad.complexity == Rat(1, 2));
  CHECK(quad.h() == 2);

  PointId p0 = config.add_point({});
  auto smalls = add_roots(config, 4);
  CharMatrix J = jonquieres(config, p0, smalls);
  MajorReport jr = majors_and_complexity(J);
  CHECK(jr.complexity == Rat(1, 2));
  CHECK(jr.h() == 4);
  CHECK(jr.max_point == p0);

  CharMatrix S5 = symmetric_map(config, 5);
  MajorReport sr = majors_and_complexity(S5);
  CHECK(sr.complexity == Rat(3, 2));
  CHECK(sr.h() == 5);
}

TEST_CASE("degree-decreasing step") {
  SUBCASE("a quadratic drops to degree 1") {
    Configuration config;
    auto r = add_roots(config, 3);
    CharMatrix M = quadratic(config, r[0], r[1], r[2]);
    auto [J, reduced] = castelnuovo_step(config, M);
    CHECK(J.d == 2);
    CHECK(reduced.d == 1);
  }
  SUBCASE("a de Jonquieres map drops to degree 1 in one step") {
    Configuration config;
    PointId p0 = config.add_point({});
    auto smalls = add_roots(config, 6);
    CharMatrix M = jonquieres(config, p0, smalls);
    auto [J, reduced] = castelnuovo_step(config, M);
    CHECK(reduced.d == 1);
  }
  SUBCASE("the symmetric quintic strictly decreases") {
    Configuration config;
    CharMatrix M = symmetric_map(config, 5);
    auto [J, reduced] = castelnuovo_step(config, M);
    CHECK(J.d == 3);
    CHECK(reduced.d < 5);
    CHECK(validate_characteristic(reduced).all_pass());
  }
  SUBCASE("degree 1 has no step") {
    Configuration config;
    CharMatrix id = identity_matrix();
    CHECK_THROWS_AS(castelnuovo_step(config, id), Error);
  }
}

TEST_CASE("constructed matrices keep weighted excess positivity") {
  Configuration config;
  PointId p0 = config.add_point({});
  PointId a = config.add_point({p0});
  PointId b = config.add_point({});
  for (CharMatrix M : {jonquieres(config, p0, {a, b}), symmetric_map(config, 5)}) {
    CHECK(base_excess_positive(M, config));
    CHECK(base_excess_positive(M, config, true));
  }
}
