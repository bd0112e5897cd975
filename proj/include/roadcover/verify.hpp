#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roadcover/geometry.hpp"

namespace roadcover {

enum class RoadStatus { independent, collaborative_only, uncovered };

struct RoadCoverage {
  std::string road_id;
  RoadStatus status = RoadStatus::uncovered;
  std::string witness_sensor;             // set when status == independent
  std::vector<std::string> witness_set;   // collaborative: sensors in path order
  std::vector<Point> witness_path;        // polyline from top to bottom boundary
};

struct CoverageReport {
  std::vector<RoadCoverage> roads;  // input order
  // Aggregate verdicts; unset when the run did not decide them.
  std::optional<bool> all_independent;
  std::optional<bool> all_collaborative;
};

// Per-road intersection graph: sensor vertices (disks meeting the road area),
// a top and a bottom dummy terminal. Vertices and edges hold indices into the
// sensor list passed to build_coverage_graph.
struct CoverageGraph {
  std::string road_id;
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;  // sensor-sensor, first < second
  std::vector<int> top;                    // sensors adjacent to the top terminal
  std::vector<int> bottom;
};

CoverageGraph build_coverage_graph(const RoadSegment& road, const std::vector<Sensor>& sensors);

// A road is independent covered iff some single sensor's disk meets both side
// boundaries; the witness is the first such sensor in input order.
CoverageReport verify_independent(const std::vector<RoadSegment>& roads,
                                  const std::vector<Sensor>& sensors);

// A road is collaborative covered iff a top-to-bottom terminal path exists in
// its coverage graph. Independent coverage is checked first and short-circuits.
// Breadth-first search returns a fewest-hop path; ties are broken by the
// lexicographically smallest sensor id sequence.
CoverageReport verify_collaborative(const std::vector<RoadSegment>& roads,
                                    const std::vector<Sensor>& sensors);

// Turns a terminal-to-terminal vertex path (given as the ordered internal
// sensor ids) into a piecewise-linear path from the top to the bottom side
// boundary that stays inside the road area and, edge by edge, inside one
// witness disk. Throws std::invalid_argument("not a witness path") when the
// ids do not form a valid path in the road's coverage graph.
std::vector<Point> extract_witness_path(const RoadSegment& road,
                                        const std::vector<Sensor>& sensors,
                                        const std::vector<std::string>& sensor_path);

}  // namespace roadcover
