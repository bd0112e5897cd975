#include <doctest.h>

#include <cmath>

#include "roadcover/oracle.hpp"
#include "roadcover/verify.hpp"
#include "test_util.hpp"

using namespace roadcover;
using testutil::road_h;
using testutil::road_v;
using testutil::sensor;

namespace {
const RoadSegment kRoad = road_h("r0", 0, 0, 200, 50);
const GridSpec kFine{0.5};
}  // namespace

TEST_CASE("grid_evasion_covered examples") {
  CHECK_FALSE(grid_evasion_covered(kRoad, {}, kFine));
  // one disk swallowing the whole rectangle
  CHECK(grid_evasion_covered(kRoad, {sensor("s", 100, 25, 250)}, kFine));
  // the two-sensor chain blocks every crossing
  CHECK(grid_evasion_covered(kRoad, {sensor("s1", 100, 60, 40), sensor("s2", 100, -10, 40)},
                             kFine));
  // the diagonal pair leaves an escape
  CHECK_FALSE(grid_evasion_covered(kRoad, {sensor("s1", 50, 50, 40), sensor("s2", 150, 0, 40)},
                                   kFine));
}

TEST_CASE("oracle_independent examples") {
  CHECK(oracle_independent(kRoad, {sensor("s", 100, 25, 75)}, kFine));
  CHECK_FALSE(oracle_independent(kRoad, {sensor("s1", 100, 60, 40), sensor("s2", 100, -10, 40)},
                                 kFine));
  CHECK_FALSE(oracle_independent(kRoad, {}, kFine));
}

TEST_CASE("margin_robust rejects knife-edge tangency") {
  // distance from the center to the far boundary is exactly the radius
  CHECK_FALSE(margin_robust(kRoad, {sensor("s", 100, 125, 75)}, 0.7));
  CHECK(margin_robust(kRoad, {sensor("s", 100, 25, 75)}, 0.7));
}

TEST_CASE("brute_force_min_sensors examples") {
  SUBCASE("single road") {
    auto res = brute_force_min_sensors({kRoad}, 75, DeployMode::arbitrary, 10);
    CHECK(res.count == 1);
    REQUIRE(res.placement.size() == 1);
    CHECK(sensor_covers_road(res.placement[0], kRoad));
  }
  SUBCASE("disjoint capsules force two sensors") {
    auto res = brute_force_min_sensors({kRoad, road_h("r1", 400, 0, 200, 50)}, 75,
                                       DeployMode::arbitrary, 10);
    CHECK(res.count == 2);
  }
  SUBCASE("three stacked roads share one sensor at rho 110") {
    std::vector<RoadSegment> roads{kRoad, road_h("r1", 0, 60, 200, 50),
                                   road_h("r2", 0, 120, 200, 50)};
    auto res = brute_force_min_sensors(roads, 110, DeployMode::arbitrary, 5);
    CHECK(res.count == 1);
    for (const auto& r : roads) CHECK(sensor_covers_road(res.placement[0], r));
  }
  SUBCASE("side-boundary candidates stay on boundaries") {
    auto res = brute_force_min_sensors({kRoad, road_h("r1", 150, 60, 200, 50)}, 75,
                                       DeployMode::side_boundary, 5);
    CHECK(res.count == 1);
  }
  SUBCASE("uncoverable road") {
    CHECK_THROWS_AS(brute_force_min_sensors({kRoad}, 10, DeployMode::arbitrary, 5),
                    std::runtime_error);
  }
}

TEST_CASE("refining the pitch never flips a robust verdict") {
  testutil::Rng rng(131);
  for (int t = 0; t < 12; ++t) {
    int m = rng.uniform_int(0, 6);
    std::vector<Sensor> sensors;
    for (int j = 0; j < m; ++j)
      sensors.push_back(sensor("s" + std::to_string(j), rng.uniform(-40, 240),
                               rng.uniform(-60, 110), rng.uniform(30, 100)));
    if (!margin_robust(kRoad, sensors, 1.5)) continue;
    bool coarse = grid_evasion_covered(kRoad, sensors, {1.0});
    bool fine = grid_evasion_covered(kRoad, sensors, {0.5});
    CHECK(coarse == fine);
  }
}

TEST_CASE("verifier agrees with the grid oracle on robust instances") {
  testutil::Rng rng(137);
  GridSpec grid{1.0};
  double delta = grid.cell * std::sqrt(2.0);
  int robust_roads = 0;
  for (int t = 0; t < 30; ++t) {
    int n = rng.uniform_int(1, 4), m = rng.uniform_int(0, 10);
    std::vector<RoadSegment> roads;
    for (int i = 0; i < n; ++i) {
      bool v = rng.uniform(0, 1) < 0.5;
      double len = rng.uniform(30, 160), x = rng.uniform(0, 150), y = rng.uniform(0, 150);
      roads.push_back(v ? road_v("r" + std::to_string(i), x, y, len, 50)
                        : road_h("r" + std::to_string(i), x, y, len, 50));
    }
    std::vector<Sensor> sensors;
    for (int j = 0; j < m; ++j)
      sensors.push_back(sensor("s" + std::to_string(j), rng.uniform(-60, 360),
                               rng.uniform(-60, 360), rng.uniform(30, 120)));
    auto ind = verify_independent(roads, sensors);
    auto col = verify_collaborative(roads, sensors);
    for (size_t i = 0; i < roads.size(); ++i) {
      if (!margin_robust(roads[i], sensors, delta)) continue;
      ++robust_roads;
      CHECK((ind.roads[i].status == RoadStatus::independent) ==
            oracle_independent(roads[i], sensors, grid));
      CHECK((col.roads[i].status != RoadStatus::uncovered) ==
            grid_evasion_covered(roads[i], sensors, grid));
    }
  }
  CHECK(robust_roads > 30);
}
