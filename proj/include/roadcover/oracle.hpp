#pragma once

#include <string>
#include <vector>

#include "roadcover/deploy.hpp"
#include "roadcover/geometry.hpp"

namespace roadcover {

// Brute-force ground truth, independent of the analytic predicates. Used by
// tests and for auditing the greedy lower bounds.

struct GridSpec {
  double cell = 1.0;  // grid pitch
};

// Rasterizes the road area at the given pitch (cell centers decide disk
// membership) and searches for a free 8-connected traversal between the two
// end-boundary cell columns. True means no evasion path exists, i.e. the road
// is covered by the sensor set.
bool grid_evasion_covered(const RoadSegment& road, const std::vector<Sensor>& sensors,
                          const GridSpec& g);

// True iff some single sensor alone blocks every traversal.
bool oracle_independent(const RoadSegment& road, const std::vector<Sensor>& sensors,
                        const GridSpec& g);

// An instance is margin-robust when growing or shrinking every sensing radius
// by delta leaves the road's coverage-graph structure (vertices, terminal
// adjacency, pair edges) unchanged. Grid oracles only adjudicate robust cases.
bool margin_robust(const RoadSegment& road, const std::vector<Sensor>& sensors, double delta);

struct BruteForceResult {
  int count = 0;
  std::vector<Sensor> placement;
};

// Exact minimum sensor count over a pitch-spaced candidate set: points inside
// each road's feasible placement region (arbitrary mode) or along each road's
// side boundaries (side-boundary mode). Iterative-deepening exact set cover;
// intended for n <= 6 roads. Throws std::runtime_error("road uncoverable at
// this rho...") when some road is covered by no candidate.
BruteForceResult brute_force_min_sensors(const std::vector<RoadSegment>& roads, double rho,
                                         DeployMode mode, double pitch);

}  // namespace roadcover
