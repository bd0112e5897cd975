#include "roadcover/instance.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace roadcover {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// 53-bit uniform in [0, 1); fixed algorithm, no library distributions.
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Instance generate_random(const GenSpec& spec) {
  if (spec.n < 1) throw std::runtime_error("infeasible generation spec: n must be >= 1");
  if (!(spec.width > 0)) throw std::runtime_error("infeasible generation spec: width must be > 0");
  if (!(spec.len_lo >= 0) || !(spec.len_lo < spec.len_hi))
    throw std::runtime_error("infeasible generation spec: need 0 <= len_lo < len_hi");
  if (spec.p_vertical < 0 || spec.p_vertical > 1)
    throw std::runtime_error("infeasible generation spec: p_vertical outside [0,1]");
  double ex = spec.region.x_max - spec.region.x_min;
  double ey = spec.region.y_max - spec.region.y_min;
  bool can_h = ex >= spec.len_hi && ey >= spec.width;
  bool can_v = ey >= spec.len_hi && ex >= spec.width;
  if ((spec.mix != OrientationMix::vertical_only && !can_h) ||
      (spec.mix != OrientationMix::horizontal_only && !can_v))
    throw std::runtime_error("infeasible generation spec: region cannot contain a road of max length");

  Instance inst;
  inst.region = spec.region;
  inst.generator = "mt19937_64/splitmix64 seed=" + std::to_string(spec.seed);
  for (int k = 0; k < spec.n; ++k) {
    std::mt19937_64 rng(splitmix64(spec.seed ^ splitmix64(static_cast<std::uint64_t>(k) + 1)));
    RoadSegment r;
    r.id = "r" + std::to_string(k);
    double u_orient = u01(rng);
    switch (spec.mix) {
      case OrientationMix::horizontal_only: r.orientation = Orientation::horizontal; break;
      case OrientationMix::vertical_only: r.orientation = Orientation::vertical; break;
      case OrientationMix::mixed:
        r.orientation = u_orient < spec.p_vertical ? Orientation::vertical : Orientation::horizontal;
        break;
    }
    r.length = spec.len_hi - u01(rng) * (spec.len_hi - spec.len_lo);  // (lo, hi]
    r.width = spec.width;
    double along = r.length, across = spec.width;
    double fx = r.orientation == Orientation::horizontal ? along : across;
    double fy = r.orientation == Orientation::horizontal ? across : along;
    r.lo.x = spec.region.x_min + u01(rng) * (ex - fx);
    r.lo.y = spec.region.y_min + u01(rng) * (ey - fy);
    inst.roads.push_back(std::move(r));
  }
  return inst;
}

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ParseError("instance parse error: " + where + ": missing or non-numeric \"" + key + "\"");
  double v = j[key].get<double>();
  if (!std::isfinite(v))
    throw ParseError("instance parse error: " + where + ": \"" + key + "\" not finite");
  return v;
}

std::string require_string(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError("instance parse error: " + where + ": missing or non-string \"" + key + "\"");
  return j[key].get<std::string>();
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance parse error: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance parse error: top level must be an object");
  if (!doc.contains("region") || !doc["region"].is_object())
    throw ParseError("instance parse error: missing \"region\" object");

  Instance inst;
  const json& reg = doc["region"];
  inst.region.x_min = require_number(reg, "region", "x_min");
  inst.region.y_min = require_number(reg, "region", "y_min");
  inst.region.x_max = require_number(reg, "region", "x_max");
  inst.region.y_max = require_number(reg, "region", "y_max");
  if (inst.region.x_max <= inst.region.x_min || inst.region.y_max <= inst.region.y_min)
    throw ParseError("instance parse error: region: empty extent");

  if (doc.contains("default_radius")) {
    double r = require_number(doc, "instance", "default_radius");
    if (r <= epsilon())
      throw ParseError("instance parse error: \"default_radius\" must be positive");
    inst.default_radius = r;
  }
  if (doc.contains("generator")) inst.generator = require_string(doc, "instance", "generator");

  if (!doc.contains("roads") || !doc["roads"].is_array())
    throw ParseError("instance parse error: missing \"roads\" array");
  std::set<std::string> road_ids;
  for (const json& jr : doc["roads"]) {
    RoadSegment r;
    r.id = require_string(jr, "road", "id");
    std::string where = "road \"" + r.id + "\"";
    if (!road_ids.insert(r.id).second)
      throw ParseError("instance parse error: " + where + ": duplicate \"id\"");
    std::string o = require_string(jr, where, "orientation");
    if (o == "h") r.orientation = Orientation::horizontal;
    else if (o == "v") r.orientation = Orientation::vertical;
    else throw ParseError("instance parse error: " + where + ": \"orientation\" must be \"h\" or \"v\"");
    r.lo.x = require_number(jr, where, "x");
    r.lo.y = require_number(jr, where, "y");
    r.length = require_number(jr, where, "length");
    r.width = require_number(jr, where, "width");
    if (r.length <= epsilon())
      throw ParseError("instance parse error: " + where + ": \"length\" must be positive");
    if (r.width <= epsilon())
      throw ParseError("instance parse error: " + where + ": \"width\" must be positive");
    Rect a = r.area();
    if (a.x0 < inst.region.x_min - epsilon() || a.x1 > inst.region.x_max + epsilon() ||
        a.y0 < inst.region.y_min - epsilon() || a.y1 > inst.region.y_max + epsilon())
      throw ParseError("instance parse error: " + where + ": road outside region");
    inst.roads.push_back(std::move(r));
  }

  std::set<std::string> sensor_ids;
  if (doc.contains("sensors")) {
    if (!doc["sensors"].is_array())
      throw ParseError("instance parse error: \"sensors\" must be an array");
    for (const json& js : doc["sensors"]) {
      Sensor s;
      s.id = require_string(js, "sensor", "id");
      std::string where = "sensor \"" + s.id + "\"";
      if (!sensor_ids.insert(s.id).second)
        throw ParseError("instance parse error: " + where + ": duplicate \"id\"");
      s.center.x = require_number(js, where, "x");
      s.center.y = require_number(js, where, "y");
      if (js.contains("radius")) {
        s.radius = require_number(js, where, "radius");
      } else if (inst.default_radius) {
        s.radius = *inst.default_radius;
      } else {
        throw ParseError("instance parse error: " + where +
                         ": \"radius\" missing and no default_radius");
      }
      if (s.radius <= epsilon())
        throw ParseError("instance parse error: " + where + ": \"radius\" must be positive");
      inst.sensors.push_back(std::move(s));
    }
  }
  return inst;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quoted(const std::string& s) {
  return nlohmann::json(s).dump();
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"region\": {\"x_min\": " << num(inst.region.x_min)
      << ", \"y_min\": " << num(inst.region.y_min) << ", \"x_max\": " << num(inst.region.x_max)
      << ", \"y_max\": " << num(inst.region.y_max) << "},\n";
  if (inst.default_radius) out << "  \"default_radius\": " << num(*inst.default_radius) << ",\n";
  if (!inst.generator.empty()) out << "  \"generator\": " << quoted(inst.generator) << ",\n";
  out << "  \"roads\": [";
  for (size_t i = 0; i < inst.roads.size(); ++i) {
    const RoadSegment& r = inst.roads[i];
    out << (i ? ",\n    " : "\n    ");
    out << "{\"id\": " << quoted(r.id) << ", \"orientation\": \""
        << (r.orientation == Orientation::horizontal ? 'h' : 'v') << "\", \"x\": " << num(r.lo.x)
        << ", \"y\": " << num(r.lo.y) << ", \"length\": " << num(r.length)
        << ", \"width\": " << num(r.width) << "}";
  }
  out << (inst.roads.empty() ? "]" : "\n  ]") << ",\n";
  out << "  \"sensors\": [";
  for (size_t i = 0; i < inst.sensors.size(); ++i) {
    const Sensor& s = inst.sensors[i];
    out << (i ? ",\n    " : "\n    ");
    out << "{\"id\": " << quoted(s.id) << ", \"x\": " << num(s.center.x)
        << ", \"y\": " << num(s.center.y) << ", \"radius\": " << num(s.radius) << "}";
  }
  out << (inst.sensors.empty() ? "]" : "\n  ]") << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace roadcover
