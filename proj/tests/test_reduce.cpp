#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/reduce.hpp"
#include "support.hpp"

using namespace cremona;
using namespace cremona::testing;

TEST_CASE("violating map") {
  SUBCASE("nothing to do for the line") {
    Configuration config;
    CHECK_FALSE(violating_map(PMClass::line(), config).has_value());
  }
  SUBCASE("the quadratic center descends through its own support") {
    Configuration config;
    auto r = add_roots(config, 3);
    PMClass c{Rat(2), {{r[0], 1}, {r[1], 1}, {r[2], 1}}};
    auto germ = violating_map(c, config);
    REQUIRE(germ.has_value());
    CHECK(germ->d == 2);
    PMClass image = apply(*germ, c, config);
    CHECK(image.degree() == 1);
  }
  SUBCASE("the worked adherent-pair class stays put") {
    AdherentPairFixture f;
    CHECK_FALSE(violating_map(f.class_a(), f.config).has_value());
  }
  SUBCASE("a special violation descends through a padded de Jonquieres germ") {
    Configuration config;
    PointId p0 = config.add_point({});
    PointId a = config.add_point({p0});
    PointId b = config.add_point({p0});
    // 5L - 4 E_p0 - 2 E_a - 2 E_b is special and the subset {a, b} gives
    // 2*(5-4) = 2 < 4.
    PMClass c{Rat(5), {{p0, 4}, {a, 2}, {b, 2}}};
    REQUIRE(in_E(c, config).verdict);
    REQUIRE(is_special(c, config));
    auto germ = violating_map(c, config);
    REQUIRE(germ.has_value());
    CHECK(germ->is_jonquieres_characteristic());
    PMClass image = apply(*germ, c, config);
    CHECK(image.degree() < 5);
  }
}

TEST_CASE("descent terminates in the identity cell") {
  SUBCASE("one step back from the involution center") {
    Configuration config;
    auto r = add_roots(config, 3);
    CharMatrix sigma = quadratic(config, r[0], r[1], r[2]);
    PMClass c = apply(sigma, PMClass::line(), config);
    ReductionTrace trace = voronoi_reduce(c, config);
    CHECK(trace.steps.size() == 1);
    CHECK(trace.terminal.degree() == 1);
    CHECK(trace.terminal_report.verdict);
  }
  SUBCASE("classes already inside the cell give an empty trace") {
    AdherentPairFixture f;
    ReductionTrace trace = voronoi_reduce(f.class_a(), f.config);
    CHECK(trace.steps.empty());
    CHECK(trace.terminal == f.class_a());
  }
  SUBCASE("words of generic quadratics reduce back to degree 1") {
    Rng rng(777);
    for (int trial = 0; trial < 20; ++trial) {
      Configuration config;
      PMClass c = PMClass::line();
      std::uniform_int_distribution<int> len(1, 3);
      int steps = len(rng);
      for (int s = 0; s < steps; ++s) {
        auto r = add_roots(config, 3);
        CharMatrix q = quadratic(config, r[0], r[1], r[2]);
        c = apply(q, c, config);
      }
      ReductionTrace trace = voronoi_reduce(c, config);
      CHECK(trace.terminal.degree() == 1);
      CHECK(static_cast<int>(trace.steps.size()) <= steps);
      Rat previous = c.degree();
      for (const ReductionStep& step : trace.steps) {
        CHECK(step.value < previous);
        previous = step.value;
      }
    }
  }
}

TEST_CASE("owning cells") {
  SUBCASE("interior classes belong to the identity cell only") {
    Configuration config;
    auto r = add_roots(config, 2);
    PMClass c{Rat(9), {{r[0], 2}, {r[1], 1}}};
    auto germs = owning_cells(c, config);
    REQUIRE(germs.size() == 1);
    CHECK(germs[0].kind == GermDescriptor::Kind::Identity);
  }
  SUBCASE("the involution midpoint lies in exactly the two cells") {
    Configuration config;
    auto r = add_roots(config, 3);
    PMClass mid{Rat(3), {{r[0], 1}, {r[1], 1}, {r[2], 1}}};
    auto germs = owning_cells(mid, config);
    REQUIRE(germs.size() == 2);
    CHECK(germs[0].kind == GermDescriptor::Kind::Identity);
    CHECK(germs[1].kind == GermDescriptor::Kind::Quadratic);
    CHECK(germs[1].points == std::vector<PointId>{r[0], r[1], r[2]});
  }
  SUBCASE("the de Jonquieres midpoint lists the concrete top germ") {
    Configuration config;
    PointId p0 = config.add_point({});
    auto smalls = add_roots(config, 6);
    CharMatrix J = jonquieres(config, p0, smalls);
    PMClass mid{Rat(5)};
    mid.set_mult(J.inv_base_pts[0], 3);
    for (std::size_t i = 1; i < J.inv_base_pts.size(); ++i) mid.set_mult(J.inv_base_pts[i], 1);
    auto germs = owning_cells(mid, config);
    bool found_full = false;
    for (const auto& g : germs)
      if (g.kind == GermDescriptor::Kind::Jonquieres && g.degree == 4 &&
          g.max_point == J.inv_base_pts[0])
        found_full = true;
    CHECK(found_full);
    // Sub-germs on pairs of the unit block are tight quadratics.
    int quads = 0;
    for (const auto& g : germs)
      if (g.kind == GermDescriptor::Kind::Quadratic) ++quads;
    CHECK(quads == 15);  // C(6, 2)
  }
  SUBCASE("the tight special example yields the quadratic family") {
    AdherentPairFixture f;
    auto germs = owning_cells(f.class_b(), f.config);
    REQUIRE(germs.size() == 2);
    CHECK(germs[0].kind == GermDescriptor::Kind::Identity);
    CHECK(germs[1].kind == GermDescriptor::Kind::QuadraticFamily);
    CHECK(germs[1].points == std::vector<PointId>{f.p0, f.p1});
  }
  SUBCASE("the non-tight special example owns nothing else") {
    AdherentPairFixture f;
    auto germs = owning_cells(f.class_a(), f.config);
    REQUIRE(germs.size() == 1);
  }
  SUBCASE("every concrete listed germ passes the cell test") {
    Configuration config;
    PointId p0 = config.add_point({});
    auto smalls = add_roots(config, 4);
    CharMatrix J = jonquieres(config, p0, smalls);
    PMClass mid{Rat(4)};
    mid.set_mult(J.inv_base_pts[0], 2);
    for (std::size_t i = 1; i < J.inv_base_pts.size(); ++i) mid.set_mult(J.inv_base_pts[i], 1);
    int concrete = 0;
    for (const auto& g : owning_cells(mid, config)) {
      Configuration scratch = config;
      if (g.kind == GermDescriptor::Kind::Quadratic) {
        CharMatrix M = quadratic(scratch, g.points[0], g.points[1], g.points[2]);
        CHECK(in_cell(mid, scratch, inverse(M)));
        ++concrete;
      } else if (g.kind == GermDescriptor::Kind::Jonquieres) {
        CharMatrix M = jonquieres(scratch, g.max_point, g.points);
        CHECK(in_cell(mid, scratch, inverse(M)));
        ++concrete;
      }
    }
    CHECK(concrete == 7);  // C(4,2) tight quadratics plus the full block
  }
  SUBCASE("classes outside the identity cell are refused") {
    Configuration config;
    auto r = add_roots(config, 3);
    PMClass center{Rat(2), {{r[0], 1}, {r[1], 1}, {r[2], 1}}};
    CHECK_THROWS_AS(owning_cells(center, config), Error);
  }
}

TEST_CASE("segment scans") {
  SUBCASE("line to de Jonquieres center crosses exactly the two cells") {
    Configuration config;
    PointId p0 = config.add_point({});
    auto smalls = add_roots(config, 4);
    CharMatrix J = jonquieres(config, p0, smalls);
    PMClass b = J.image_of_line();
    auto samples = segment_scan(PMClass::line(), b, config, 9);
    REQUIRE(samples.size() == 9);
    // First half is already inside the identity cell, second half needs
    // a nonempty descent word.
    CHECK(samples.front().word.empty());
    CHECK(!samples.back().word.empty());
    std::set<std::string> regions;
    for (const auto& s : samples) regions.insert(region_signature(s, config));
    CHECK(regions.size() == 3);
  }
  SUBCASE("degenerate segment has one region") {
    Configuration config;
    auto r = add_roots(config, 2);
    PMClass a{Rat(3), {{r[0], 1}, {r[1], 1}}};
    auto samples = segment_scan(a, a, config, 4);
    std::set<std::string> regions;
    for (const auto& s : samples) regions.insert(region_signature(s, config));
    CHECK(regions.size() == 1);
  }
  SUBCASE("the (4;2^3,1^3) segment shows a third cell") {
    Configuration config;
    auto a = add_roots(config, 3);
    CharMatrix q1 = quadratic(config, a[0], a[1], a[2]);
    auto b = add_roots(config, 3);
    CharMatrix q2 = quadratic(config, b[0], b[1], b[2]);
    CharMatrix F = compose(q2, q1, config);
    REQUIRE(F.characteristic() == std::vector<std::int64_t>{4, 2, 2, 2, 1, 1, 1});
    PMClass center = F.image_of_line();
    // The ambient midpoint is equidistant but outside the identity cell.
    PMClass mid = Rat(1, 2) * (PMClass::line() + center);
    PMClass doubled = 2 * mid;
    CHECK(intersect(doubled, PMClass::line()) == 5);
    CHECK(intersect(doubled, center) == 5);
    CHECK_FALSE(in_V_id(doubled, config).verdict);
    auto samples = segment_scan(PMClass::line(), center, config, 9);
    std::set<std::string> regions;
    for (const auto& s : samples) regions.insert(region_signature(s, config));
    CHECK(regions.size() >= 3);
  }
  SUBCASE("bad sample counts are refused") {
    Configuration config;
    CHECK_THROWS_AS(segment_scan(PMClass::line(), PMClass::line(), config, 1), Error);
  }
}
