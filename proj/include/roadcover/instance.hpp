#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "roadcover/geometry.hpp"

namespace roadcover {

struct Region {
  double x_min = 0, y_min = 0, x_max = 0, y_max = 0;
};

struct Instance {
  Region region;
  std::optional<double> default_radius;
  std::string generator;  // provenance note written by generate_random
  std::vector<RoadSegment> roads;
  std::vector<Sensor> sensors;  // radii resolved against default_radius at parse time
};

enum class OrientationMix { horizontal_only, vertical_only, mixed };

struct GenSpec {
  int n = 1;
  Region region{0, 0, 1000, 1000};
  double width = 50;
  double len_lo = 0;    // lengths drawn from the half-open interval (len_lo, len_hi]
  double len_hi = 200;
  OrientationMix mix = OrientationMix::horizontal_only;
  double p_vertical = 0.5;  // used when mix == mixed
  std::uint64_t seed = 0;
};

// Seeded road placement: every road gets its own substream (seeded with
// splitmix64(seed ^ splitmix64(index+1)) feeding an mt19937_64), so changing n
// never shifts earlier roads, and results are identical across platforms.
// Lengths are uniform on (len_lo, len_hi]; min corners uniform over positions
// keeping the road inside the region; overlaps between roads are permitted.
Instance generate_random(const GenSpec& spec);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance file format: a JSON document with top-level keys
//   region {x_min,y_min,x_max,y_max}, default_radius (optional number),
//   generator (optional string),
//   roads [{id, orientation:"h"|"v", x, y, length, width}],
//   sensors [{id, x, y, radius?}]
// where a sensor without radius inherits default_radius. UTF-8, no comments.
Instance parse_instance(const std::string& text);

// Deterministic serialization; numbers carry 17 significant digits so
// parse(serialize(i)) reproduces i exactly.
std::string serialize_instance(const Instance& inst);

}  // namespace roadcover
