#pragma once

#include <array>
#include <string>
#include <vector>

#include "roadcover/geometry.hpp"

namespace roadcover {

enum class DeployMode { arbitrary, side_boundary };

// One greedy step: the representative road taken into the independent set,
// the roads removed with it, and the sensors placed for the whole group.
struct SensorGroup {
  std::string representative;
  Orientation orientation = Orientation::horizontal;
  std::vector<std::string> covered;  // representative first
  std::vector<Sensor> sensors;
};

struct Deployment {
  DeployMode mode = DeployMode::arbitrary;
  double radius = 0.0;
  std::vector<Sensor> placed;
  std::vector<std::string> independent_h;  // representative road ids, greedy order
  std::vector<std::string> independent_v;
  std::vector<SensorGroup> groups;

  int lower_bound() const {
    return static_cast<int>(independent_h.size() + independent_v.size());
  }
  int placed_count(Orientation o) const;
};

// Sensor positions sufficient to w-height cover the trailing 2*rho cap of the
// road: one at the trailing end midpoint, one D = sqrt(4*rho^2-(rho+w/2)^2)
// beyond it, and two on their perpendicular bisector at height
// (2*rho+w)/4 + (rho-w) off the road axis. Vertical roads use the same
// construction rotated about the top end. Throws
// std::invalid_argument("pattern precondition violated") when rho < w.
std::array<Point, 4> four_sensor_pattern(const RoadSegment& road, double rho);

// Greedy deployment with unrestricted sensor positions. Processes each
// orientation by ascending trailing-end coordinate; a representative removes
// every remaining road whose capsule meets its own, then the smallest prefix-
// preferred subset of its four-sensor pattern covering the whole group is
// placed. Placed count <= 4 * lower_bound. Throws
// std::runtime_error("unsupported instance...") for mixed widths or rho < w.
Deployment deploy_arbitrary(const std::vector<RoadSegment>& roads, double rho);

// Greedy deployment with sensors restricted to road side boundaries: a
// representative removes every remaining road with a side boundary meeting
// its capsule, and covers the group with sensors on its trailing corners
// (top corner preferred), pruned to the minimal covering subset. Placed
// count <= 2 * lower_bound.
Deployment deploy_side_boundary(const std::vector<RoadSegment>& roads, double rho);

// Can one sensor of range rho independently cover both roads?
// restricted=false: anywhere (capsule intersection test). restricted=true:
// sensor confined to a side boundary of either road.
bool coverable_by_one_sensor(const RoadSegment& ri, const RoadSegment& rj, double rho,
                             bool restricted);

}  // namespace roadcover
