#include "roadcover/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

namespace roadcover {

CoverageGraph build_coverage_graph(const RoadSegment& road, const std::vector<Sensor>& sensors) {
  CoverageGraph g;
  g.road_id = road.id;
  Rect area = road.area();
  LineSegment top = road.side_top(), bottom = road.side_bottom();
  for (int i = 0; i < static_cast<int>(sensors.size()); ++i) {
    if (!disk_intersects_rect(sensors[i], area)) continue;
    g.vertices.push_back(i);
    if (disk_intersects_segment(sensors[i], top)) g.top.push_back(i);
    if (disk_intersects_segment(sensors[i], bottom)) g.bottom.push_back(i);
  }
  for (size_t a = 0; a < g.vertices.size(); ++a)
    for (size_t b = a + 1; b < g.vertices.size(); ++b) {
      int i = g.vertices[a], j = g.vertices[b];
      if (lens_intersects_rect(sensors[i], sensors[j], road)) g.edges.emplace_back(i, j);
    }
  return g;
}

namespace {

int independent_witness(const RoadSegment& road, const std::vector<Sensor>& sensors) {
  for (int i = 0; i < static_cast<int>(sensors.size()); ++i)
    if (sensor_covers_road(sensors[i], road)) return i;
  return -1;
}

// Fewest-hop terminal path, ties broken by lexicographically smallest sensor
// id sequence. Returns the internal sensor indices, empty optional when no
// path exists.
std::optional<std::vector<int>> shortest_terminal_path(const CoverageGraph& g,
                                                       const std::vector<Sensor>& sensors) {
  std::map<int, std::vector<int>> adj;  // sensor index -> sensor neighbours
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  constexpr int kInf = std::numeric_limits<int>::max();
  // Hop distance to the bottom terminal.
  std::map<int, int> dist;
  std::queue<int> q;
  for (int i : g.bottom) {
    dist[i] = 1;
    q.push(i);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (!dist.count(u)) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  int best = kInf;
  for (int i : g.top)
    if (dist.count(i)) best = std::min(best, dist[i]);
  if (best == kInf) return std::nullopt;

  auto id_less = [&](int a, int b) { return sensors[a].id < sensors[b].id; };
  std::vector<int> path;
  // Greedy walk from the top terminal along decreasing distance.
  std::vector<int> frontier;
  for (int i : g.top)
    if (dist.count(i) && dist[i] == best) frontier.push_back(i);
  int cur = *std::min_element(frontier.begin(), frontier.end(), id_less);
  path.push_back(cur);
  while (dist[cur] > 1) {
    int next = -1;
    for (int u : adj[cur])
      if (dist.count(u) && dist[u] == dist[cur] - 1 && (next < 0 || id_less(u, next))) next = u;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

}  // namespace

CoverageReport verify_independent(const std::vector<RoadSegment>& roads,
                                  const std::vector<Sensor>& sensors) {
  CoverageReport report;
  bool all = true;
  for (const auto& road : roads) {
    RoadCoverage rc;
    rc.road_id = road.id;
    int w = independent_witness(road, sensors);
    if (w >= 0) {
      rc.status = RoadStatus::independent;
      rc.witness_sensor = sensors[w].id;
    } else {
      all = false;
    }
    report.roads.push_back(std::move(rc));
  }
  report.all_independent = all;
  if (all) report.all_collaborative = true;
  return report;
}

CoverageReport verify_collaborative(const std::vector<RoadSegment>& roads,
                                    const std::vector<Sensor>& sensors) {
  CoverageReport report;
  bool all_ind = true, all_cov = true;
  for (const auto& road : roads) {
    RoadCoverage rc;
    rc.road_id = road.id;
    int w = independent_witness(road, sensors);
    if (w >= 0) {
      rc.status = RoadStatus::independent;
      rc.witness_sensor = sensors[w].id;
      report.roads.push_back(std::move(rc));
      continue;
    }
    all_ind = false;
    CoverageGraph g = build_coverage_graph(road, sensors);
    auto path = shortest_terminal_path(g, sensors);
    if (!path) {
      all_cov = false;
      report.roads.push_back(std::move(rc));
      continue;
    }
    rc.status = RoadStatus::collaborative_only;
    for (int i : *path) rc.witness_set.push_back(sensors[i].id);
    rc.witness_path = extract_witness_path(road, sensors, rc.witness_set);
    report.roads.push_back(std::move(rc));
  }
  report.all_independent = all_ind;
  report.all_collaborative = all_cov;
  return report;
}

namespace {

Point clamp_to_rect(Point p, const Rect& r) {
  return {std::clamp(p.x, r.x0, r.x1), std::clamp(p.y, r.y0, r.y1)};
}

Point chord_midpoint(const Sensor& s, const LineSegment& seg) {
  auto chord = disk_segment_chord(s, seg);
  return 0.5 * (chord->first + chord->second);
}

// Joint between two consecutive witness disks: a circle-circle intersection
// point inside the road area, preferring the one nearer `prev` (ties go to the
// lexicographically smaller point); falls back to any lens/rectangle witness
// when neither intersection point lies inside.
Point pair_joint(const Sensor& a, const Sensor& b, const RoadSegment& road, Point prev) {
  Rect area = road.area();
  std::vector<Point> inside;
  try {
    for (Point p : circle_circle_intersections(a, b))
      if (area.contains(p, epsilon())) inside.push_back(p);
  } catch (const std::invalid_argument&) {
    // coincident circles: fall through to the lens witness
  }
  if (!inside.empty()) {
    Point best = inside[0];
    for (Point p : inside) {
      double dp = dist(p, prev), db = dist(best, prev);
      if (dp < db || (dp == db && (p.x < best.x || (p.x == best.x && p.y < best.y)))) best = p;
    }
    return best;
  }
  auto w = lens_rect_witness(a, b, road);
  return *w;  // edge validity guarantees a witness exists
}

}  // namespace

std::vector<Point> extract_witness_path(const RoadSegment& road,
                                        const std::vector<Sensor>& sensors,
                                        const std::vector<std::string>& sensor_path) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(sensors.size()); ++i) index[sensors[i].id] = i;
  std::vector<const Sensor*> chain;
  for (const auto& id : sensor_path) {
    auto it = index.find(id);
    if (it == index.end()) throw std::invalid_argument("not a witness path");
    chain.push_back(&sensors[it->second]);
  }
  if (chain.empty()) throw std::invalid_argument("not a witness path");
  if (!disk_intersects_segment(*chain.front(), road.side_top()))
    throw std::invalid_argument("not a witness path");
  if (!disk_intersects_segment(*chain.back(), road.side_bottom()))
    throw std::invalid_argument("not a witness path");
  for (size_t k = 0; k + 1 < chain.size(); ++k)
    if (!lens_intersects_rect(*chain[k], *chain[k + 1], road))
      throw std::invalid_argument("not a witness path");

  std::vector<Point> poly;
  poly.push_back(chord_midpoint(*chain.front(), road.side_top()));
  if (chain.size() == 1) {
    poly.push_back(clamp_to_rect(chain.front()->center, road.area()));
  } else {
    for (size_t k = 0; k + 1 < chain.size(); ++k)
      poly.push_back(pair_joint(*chain[k], *chain[k + 1], road, poly.back()));
  }
  poly.push_back(chord_midpoint(*chain.back(), road.side_bottom()));
  return poly;
}

}  // namespace roadcover
