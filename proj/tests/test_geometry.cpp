#include <doctest.h>

#include <cmath>

#include "roadcover/geometry.hpp"
#include "test_util.hpp"

using namespace roadcover;
using testutil::road_h;
using testutil::road_v;
using testutil::sensor;

namespace {
const LineSegment kSeg{{0, 50}, {200, 50}};
const RoadSegment kRoad = road_h("r", 0, 0, 200, 50);
}  // namespace

TEST_CASE("point_segment_distance") {
  CHECK(point_segment_distance({100, 25}, kSeg) == doctest::Approx(25).epsilon(1e-12));
  CHECK(point_segment_distance({300, 50}, kSeg) == doctest::Approx(100).epsilon(1e-12));
  // 60-80-100 right triangle from the (200,50) endpoint
  CHECK(point_segment_distance({260, 130}, kSeg) == doctest::Approx(100).epsilon(1e-12));
}

TEST_CASE("point_segment_distance zero iff on segment") {
  testutil::Rng rng(11);
  for (int t = 0; t < 2000; ++t) {
    Point a{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    Point b{rng.uniform(-100, 100), rng.uniform(-100, 100)};
    if (dist(a, b) < 1e-6) continue;
    LineSegment s{a, b};
    Point on = a + rng.uniform(0, 1) * (b - a);
    CHECK(point_segment_distance(on, s) <= 1e-9);
    Point d{-(b - a).y, (b - a).x};
    double off = rng.uniform(0.001, 10);
    Point q = on + (off / norm(d)) * d;
    CHECK(point_segment_distance(q, s) > 1e-9);
  }
}

TEST_CASE("disk_intersects_segment") {
  CHECK(disk_intersects_segment(sensor("s", 100, 25, 75), kSeg));
  CHECK_FALSE(disk_intersects_segment(sensor("s", 100, 200, 75), kSeg));
  // tangency counts (closed semantics)
  CHECK(disk_intersects_segment(sensor("s", 100, 125, 75), kSeg));
}

TEST_CASE("circle_circle_intersections") {
  SUBCASE("external tangency") {
    auto pts = circle_circle_intersections(sensor("a", 0, 0, 75), sensor("b", 150, 0, 75));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x == doctest::Approx(75).epsilon(1e-12));
    CHECK(pts[0].y == doctest::Approx(0).epsilon(1e-12));
  }
  SUBCASE("two points on the radical line") {
    Sensor a = sensor("a", 100, 50, 40), b = sensor("b", 100, 0, 40);
    auto pts = circle_circle_intersections(a, b);
    REQUIRE(pts.size() == 2);
    double h = std::sqrt(975.0);
    CHECK(pts[0].x == doctest::Approx(100 - h).epsilon(1e-12));
    CHECK(pts[1].x == doctest::Approx(100 + h).epsilon(1e-12));
    CHECK(pts[0].y == doctest::Approx(25).epsilon(1e-12));
    CHECK(pts[1].y == doctest::Approx(25).epsilon(1e-12));
    for (Point p : pts) {  // substitute back into both circle equations
      CHECK(dist(p, a.center) == doctest::Approx(a.radius).epsilon(1e-12));
      CHECK(dist(p, b.center) == doctest::Approx(b.radius).epsilon(1e-12));
    }
  }
  SUBCASE("disjoint") {
    CHECK(circle_circle_intersections(sensor("a", 0, 0, 75), sensor("b", 300, 0, 75)).empty());
  }
  SUBCASE("nested") {
    CHECK(circle_circle_intersections(sensor("a", 0, 0, 100), sensor("b", 5, 0, 10)).empty());
  }
  SUBCASE("degenerate coincident") {
    CHECK_THROWS_WITH_AS(circle_circle_intersections(sensor("a", 1, 2, 10), sensor("b", 1, 2, 10)),
                         "degenerate: infinite intersection", std::invalid_argument);
  }
}

TEST_CASE("lens_intersects_rect examples") {
  Sensor a = sensor("a", 100, 50, 40), b = sensor("b", 100, 0, 40);
  CHECK(lens_intersects_rect(a, b, kRoad));
  CHECK_FALSE(lens_intersects_rect(a, b, road_h("r2", 200, 0, 200, 50)));
  CHECK_FALSE(lens_intersects_rect(sensor("a", 0, 0, 10), sensor("b", 100, 0, 10), kRoad));
}

TEST_CASE("lens_intersects_rect matches a grid oracle away from knife edges") {
  testutil::Rng rng(23);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    double w = rng.uniform(10, 60);
    RoadSegment r = road_h("r", rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(20, 150), w);
    double r1 = rng.uniform(10, 80), r2 = rng.uniform(10, 80);
    Sensor a = sensor("a", rng.uniform(-100, 250), rng.uniform(-100, 150), r1);
    Sensor b = sensor("b", rng.uniform(-100, 250), rng.uniform(-100, 150), r2);
    double cell = std::min({w, r1, r2}) / 50;
    // skip configurations whose verdict flips within the cell diagonal
    auto grow = [&](const Sensor& s, double d) { return Sensor{s.id, s.center, s.radius + d}; };
    double diag = cell * std::sqrt(2.0);
    if (lens_intersects_rect(grow(a, -diag), grow(b, -diag), r) !=
        lens_intersects_rect(grow(a, diag), grow(b, diag), r))
      continue;
    ++checked;
    CHECK(lens_intersects_rect(a, b, r) == testutil::lens_rect_grid_oracle(a, b, r, cell));
  }
  CHECK(checked > 150);
}

TEST_CASE("lens containment cases are witnessed") {
  // lens equals the small disk, strictly inside the big one and inside the rect
  Sensor small = sensor("a", 100, 25, 8);
  Sensor big = sensor("b", 120, 25, 200);
  CHECK(lens_intersects_rect(small, big, kRoad));
  // rect fully inside the lens
  Sensor l = sensor("a", 100, -40, 150), u = sensor("b", 100, 90, 150);
  CHECK(lens_intersects_rect(l, u, kRoad));
}

TEST_CASE("capsule_contains") {
  Capsule c{kRoad, 75};
  CHECK(capsule_contains(c, {100, 25}));
  // boundary point of the right lens: corner distance exactly 75
  CHECK(capsule_contains(c, {200 + std::sqrt(5000.0), 25}));
  CHECK_FALSE(capsule_contains(c, {275, 25}));
}

TEST_CASE("capsule convexity witness") {
  testutil::Rng rng(37);
  for (int t = 0; t < 1000; ++t) {
    double w = rng.uniform(5, 50);
    double rho = w * rng.uniform(1.0, 2.5);
    RoadSegment road =
        t % 2 ? road_v("r", rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(10, 120), w)
              : road_h("r", rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(10, 120), w);
    Capsule c{road, rho};
    roadcover::Rect a = road.area();
    double m = rho + 5;
    Point p{rng.uniform(a.x0 - m, a.x1 + m), rng.uniform(a.y0 - m, a.y1 + m)};
    Point q{rng.uniform(a.x0 - m, a.x1 + m), rng.uniform(a.y0 - m, a.y1 + m)};
    if (!capsule_contains(c, p) || !capsule_contains(c, q)) continue;
    for (int k = 1; k <= 16; ++k) {
      double s = k / 17.0;
      CHECK(capsule_contains(c, p + s * (q - p)));
    }
  }
}

TEST_CASE("capsule decomposition equivalence") {
  testutil::Rng rng(41);
  for (int cfg = 0; cfg < 20; ++cfg) {
    double w = rng.uniform(5, 60);
    double rho = w * rng.uniform(1.0, 3.0);
    RoadSegment road =
        cfg % 2 ? road_v("r", rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(10, 150), w)
                : road_h("r", rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(10, 150), w);
    Capsule c{road, rho};
    roadcover::Rect a = road.area();
    double m = rho + 10;
    for (int t = 0; t < 10000; ++t) {
      Point p{rng.uniform(a.x0 - m, a.x1 + m), rng.uniform(a.y0 - m, a.y1 + m)};
      // stay off the boundary where the eps conventions of the two routes differ
      double d_top = point_segment_distance(p, road.side_top());
      double d_bot = point_segment_distance(p, road.side_bottom());
      if (std::abs(d_top - rho) < 1e-7 || std::abs(d_bot - rho) < 1e-7) continue;
      CHECK(capsule_contains(c, p) == testutil::capsule_decomposition_contains(road, rho, p));
    }
  }
}

TEST_CASE("capsules_intersect examples") {
  CHECK(capsules_intersect({kRoad, 75}, {kRoad, 75}));
  CHECK_FALSE(capsules_intersect({kRoad, 75}, {road_h("r2", 400, 0, 200, 50), 75}));
  CHECK(capsules_intersect({kRoad, 75}, {road_h("r2", 0, 60, 200, 50), 75}));
}

TEST_CASE("capsules_intersect agrees with the closed-form reduction") {
  testutil::Rng rng(53);
  int hits = 0;
  for (int t = 0; t < 500; ++t) {
    bool vertical = t % 2;
    double w = rng.uniform(10, 50);
    double rho = w * rng.uniform(1.0, 2.0);
    auto mk = [&](const char* id) {
      double x = rng.uniform(-150, 150), y = rng.uniform(-150, 150), len = rng.uniform(10, 180);
      return vertical ? road_v(id, x, y, len, w) : road_h(id, x, y, len, w);
    };
    RoadSegment r1 = mk("a"), r2 = mk("b");
    bool got = capsules_intersect({r1, rho}, {r2, rho});
    bool want = testutil::capsules_intersect_closed_form(r1, r2, rho);
    // the two routes may disagree only within tolerance of a knife edge
    if (got != want) {
      CHECK(testutil::capsules_intersect_closed_form(r1, r2, rho + 1e-6) !=
            testutil::capsules_intersect_closed_form(r1, r2, rho - 1e-6));
    }
    hits += got;
  }
  CHECK(hits > 50);  // the sample exercises both outcomes
}

TEST_CASE("capsules_intersect is symmetric") {
  testutil::Rng rng(59);
  for (int t = 0; t < 200; ++t) {
    double w = rng.uniform(10, 50);
    double rho = w * rng.uniform(1.0, 2.0);
    RoadSegment r1 = road_h("a", rng.uniform(-100, 100), rng.uniform(-100, 100),
                            rng.uniform(10, 150), w);
    RoadSegment r2 = road_h("b", rng.uniform(-100, 100), rng.uniform(-100, 100),
                            rng.uniform(10, 150), w);
    CHECK(capsules_intersect({r1, rho}, {r2, rho}) == capsules_intersect({r2, rho}, {r1, rho}));
  }
}

TEST_CASE("capsules_intersect rejects mixed preconditions") {
  CHECK_THROWS_AS(capsules_intersect({kRoad, 75}, {road_v("v", 0, 0, 100, 50), 75}),
                  std::invalid_argument);
  CHECK_THROWS_AS(capsules_intersect({kRoad, 75}, {kRoad, 80}), std::invalid_argument);
  CHECK_THROWS_AS(capsules_intersect({kRoad, 40}, {kRoad, 40}), std::invalid_argument);
}

TEST_CASE("segment_within_disk") {
  Sensor s = sensor("s", 100, 25, 75);
  CHECK(segment_within_disk({{100, 0}, {100, 50}}, s));
  CHECK_FALSE(segment_within_disk({{100, 0}, {100, 200}}, s));
  // both endpoints at distance exactly rho
  CHECK(segment_within_disk({{100, 100}, {100, -50}}, s));
}

TEST_CASE("segment_intersects_capsule closed form") {
  Capsule c{kRoad, 75};
  // boundary of a road stacked 60 above: y = 60 line crosses the rect part
  CHECK(segment_intersects_capsule({{0, 60}, {200, 60}}, c));
  CHECK_FALSE(segment_intersects_capsule({{0, 130}, {200, 130}}, c));
  // vertical segment beyond the lens tip
  CHECK(segment_intersects_capsule({{200 + std::sqrt(5000.0) - 1, 0}, {200 + std::sqrt(5000.0) - 1, 50}}, c));
  CHECK_FALSE(segment_intersects_capsule({{275, 0}, {275, 50}}, c));
}

TEST_CASE("cap membership clips the capsule at the end boundary") {
  Cap right{kRoad, 75, CapSide::right};
  CHECK(cap_contains(right, {210, 25}));
  CHECK_FALSE(cap_contains(right, {190, 25}));  // inside capsule, left of the end
  CHECK_FALSE(cap_contains(right, {275, 25}));
  Cap left{kRoad, 75, CapSide::left};
  CHECK(cap_contains(left, {-10, 25}));
  CHECK_FALSE(cap_contains(left, {10, 25}));
}
