#include "roadcover/deploy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace roadcover {

int Deployment::placed_count(Orientation o) const {
  int n = 0;
  for (const auto& g : groups)
    if (g.orientation == o) n += static_cast<int>(g.sensors.size());
  return n;
}

namespace {

std::array<Point, 4> horizontal_pattern(const RoadSegment& road, double rho) {
  Rect r = road.area();
  double w = road.width;
  Point end{r.x1, (r.y0 + r.y1) / 2};
  double d = std::sqrt(4 * rho * rho - (rho + w / 2) * (rho + w / 2));
  double h = (2 * rho + w) / 4 + (rho - w);
  return {end, Point{end.x + d / 2, end.y + h}, Point{end.x + d / 2, end.y - h},
          Point{end.x + d, end.y}};
}

}  // namespace

std::array<Point, 4> four_sensor_pattern(const RoadSegment& road, double rho) {
  if (rho < road.width - epsilon())
    throw std::invalid_argument("pattern precondition violated");
  if (road.orientation == Orientation::horizontal) return horizontal_pattern(road, rho);
  auto pts = horizontal_pattern(to_horizontal_frame(road), rho);
  std::array<Point, 4> out;
  for (size_t i = 0; i < 4; ++i) out[i] = rotate_ccw(pts[i]);
  return out;
}

namespace {

// Greedy core; roads are given in the horizontal frame. remove(i, j) decides
// whether taking roads[i] as representative removes roads[j].
template <typename RemoveFn, typename CandidatesFn>
std::vector<SensorGroup> greedy_cover(const std::vector<RoadSegment>& roads, double rho,
                                      Orientation orig_orientation, RemoveFn remove,
                                      CandidatesFn candidates) {
  std::vector<size_t> order(roads.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    double ea = roads[a].trailing_end(), eb = roads[b].trailing_end();
    return ea != eb ? ea < eb : roads[a].id < roads[b].id;
  });
  std::vector<bool> alive(roads.size(), true);
  std::vector<SensorGroup> groups;
  for (size_t pos = 0; pos < order.size(); ++pos) {
    size_t i = order[pos];
    if (!alive[i]) continue;
    alive[i] = false;
    SensorGroup g;
    g.representative = roads[i].id;
    g.orientation = orig_orientation;
    g.covered.push_back(roads[i].id);
    std::vector<size_t> members{i};
    for (size_t q = pos + 1; q < order.size(); ++q) {
      size_t j = order[q];
      if (!alive[j] || !remove(i, j)) continue;
      alive[j] = false;
      g.covered.push_back(roads[j].id);
      members.push_back(j);
    }

    // Smallest covering subset of the candidate positions, preferring earlier
    // candidates at equal size.
    std::vector<Point> cand = candidates(i);
    auto covers_all = [&](unsigned mask) {
      for (size_t m : members) {
        bool ok = false;
        for (size_t c = 0; c < cand.size() && !ok; ++c)
          if (mask & (1u << c)) ok = sensor_covers_road({"", cand[c], rho}, roads[m]);
        if (!ok) return false;
      }
      return true;
    };
    unsigned chosen = 0;
    for (size_t size = 1; size <= cand.size() && !chosen; ++size) {
      std::vector<unsigned> masks;
      for (unsigned mask = 1; mask < (1u << cand.size()); ++mask)
        if (static_cast<size_t>(std::popcount(mask)) == size) masks.push_back(mask);
      // Lexicographic preference on candidate indices: lowest-index members
      // first. Bit k of the mask is candidate k, so compare reversed bits.
      std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
        for (size_t c = 0; c < cand.size(); ++c) {
          bool ia = a & (1u << c), ib = b & (1u << c);
          if (ia != ib) return ia;
        }
        return false;
      });
      for (unsigned mask : masks)
        if (covers_all(mask)) {
          chosen = mask;
          break;
        }
    }
    if (!chosen)
      throw std::logic_error("deployment pattern failed to cover its group (road " +
                             roads[i].id + ")");
    int slot = 0;
    for (size_t c = 0; c < cand.size(); ++c)
      if (chosen & (1u << c))
        g.sensors.push_back({roads[i].id + "-s" + std::to_string(++slot), cand[c], rho});
    groups.push_back(std::move(g));
  }
  return groups;
}

Deployment deploy_impl(const std::vector<RoadSegment>& roads, double rho, DeployMode mode) {
  if (!roads.empty()) {
    double w = roads.front().width;
    for (const auto& r : roads)
      if (std::abs(r.width - w) > epsilon())
        throw std::runtime_error("unsupported instance: mixed road widths");
    if (rho < w - epsilon())
      throw std::runtime_error("unsupported instance: sensing radius below road width");
  }
  Deployment dep;
  dep.mode = mode;
  dep.radius = rho;

  for (Orientation o : {Orientation::horizontal, Orientation::vertical}) {
    std::vector<RoadSegment> frame;  // all mapped to the horizontal frame
    for (const auto& r : roads)
      if (r.orientation == o) frame.push_back(to_horizontal_frame(r));
    if (frame.empty()) continue;

    // A representative removes every road its full four-sensor pattern can
    // already cover; capsule intersection implies this, so survivors keep
    // pairwise disjoint capsules and the |I| lower bound stays valid.
    auto remove_arbitrary = [&](size_t i, size_t j) {
      for (Point p : horizontal_pattern(frame[i], rho))
        if (sensor_covers_road({"", p, rho}, frame[j])) return true;
      return false;
    };
    auto remove_side = [&](size_t i, size_t j) {
      Capsule ci{frame[i], rho};
      return segment_intersects_capsule(frame[j].side_top(), ci) ||
             segment_intersects_capsule(frame[j].side_bottom(), ci);
    };
    auto cand_arbitrary = [&](size_t i) {
      auto pat = horizontal_pattern(frame[i], rho);
      return std::vector<Point>(pat.begin(), pat.end());
    };
    auto cand_side = [&](size_t i) {
      Rect r = frame[i].area();
      return std::vector<Point>{{r.x1, r.y1}, {r.x1, r.y0}};  // top corner first
    };

    std::vector<SensorGroup> groups =
        mode == DeployMode::arbitrary
            ? greedy_cover(frame, rho, o, remove_arbitrary, cand_arbitrary)
            : greedy_cover(frame, rho, o, remove_side, cand_side);

    for (auto& g : groups) {
      if (o == Orientation::vertical)
        for (auto& s : g.sensors) s.center = rotate_ccw(s.center);
      (o == Orientation::horizontal ? dep.independent_h : dep.independent_v)
          .push_back(g.representative);
      for (const auto& s : g.sensors) dep.placed.push_back(s);
      dep.groups.push_back(std::move(g));
    }
  }
  return dep;
}

}  // namespace

Deployment deploy_arbitrary(const std::vector<RoadSegment>& roads, double rho) {
  return deploy_impl(roads, rho, DeployMode::arbitrary);
}

Deployment deploy_side_boundary(const std::vector<RoadSegment>& roads, double rho) {
  return deploy_impl(roads, rho, DeployMode::side_boundary);
}

bool coverable_by_one_sensor(const RoadSegment& ri, const RoadSegment& rj, double rho,
                             bool restricted) {
  if (ri.orientation != rj.orientation)
    throw std::invalid_argument("coverable_by_one_sensor: mixed orientations");
  if (!restricted) return capsules_intersect({ri, rho}, {rj, rho});
  Capsule ci{ri, rho}, cj{rj, rho};
  return segment_intersects_capsule(rj.side_top(), ci) ||
         segment_intersects_capsule(rj.side_bottom(), ci) ||
         segment_intersects_capsule(ri.side_top(), cj) ||
         segment_intersects_capsule(ri.side_bottom(), cj);
}

}  // namespace roadcover
