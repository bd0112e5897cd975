#include "roadcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>

#include "roadcover/verify.hpp"

namespace roadcover {

bool grid_evasion_covered(const RoadSegment& road, const std::vector<Sensor>& sensors,
                          const GridSpec& g) {
  Rect r = road.area();
  bool horizontal = road.orientation == Orientation::horizontal;
  double along = horizontal ? r.x1 - r.x0 : r.y1 - r.y0;
  double across = horizontal ? r.y1 - r.y0 : r.x1 - r.x0;
  int nx = std::max(1, static_cast<int>(std::ceil(along / g.cell)));
  int ny = std::max(1, static_cast<int>(std::ceil(across / g.cell)));
  double sx = along / nx, sy = across / ny;

  std::vector<char> free_cell(static_cast<size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double a = (i + 0.5) * sx, c = (j + 0.5) * sy;
      Point p = horizontal ? Point{r.x0 + a, r.y0 + c} : Point{r.x0 + c, r.y0 + a};
      bool free = true;
      for (const auto& s : sensors)
        if (dist(p, s.center) <= s.radius) {
          free = false;
          break;
        }
      free_cell[static_cast<size_t>(i) * ny + j] = free;
    }

  // 8-connected flood from the first along-axis column; an evasion path
  // reaches the last column.
  std::vector<char> seen(free_cell.size(), 0);
  std::queue<int> q;
  for (int j = 0; j < ny; ++j)
    if (free_cell[j]) {
      seen[j] = 1;
      q.push(j);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    int i = v / ny, j = v % ny;
    if (i == nx - 1) return false;
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj) {
        int ni = i + di, nj = j + dj;
        if (ni < 0 || ni >= nx || nj < 0 || nj >= ny) continue;
        int u = ni * ny + nj;
        if (free_cell[u] && !seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
      }
  }
  return true;
}

bool oracle_independent(const RoadSegment& road, const std::vector<Sensor>& sensors,
                        const GridSpec& g) {
  for (const auto& s : sensors)
    if (grid_evasion_covered(road, {s}, g)) return true;
  return false;
}

namespace {

struct GraphSignature {
  std::vector<int> vertices, top, bottom;
  std::vector<std::pair<int, int>> edges;
  bool operator==(const GraphSignature&) const = default;
};

GraphSignature graph_at_offset(const RoadSegment& road, const std::vector<Sensor>& sensors,
                               double offset) {
  std::vector<Sensor> adj = sensors;
  for (auto& s : adj) s.radius = std::max(s.radius + offset, 0.0);
  CoverageGraph g = build_coverage_graph(road, adj);
  return {g.vertices, g.top, g.bottom, g.edges};
}

}  // namespace

bool margin_robust(const RoadSegment& road, const std::vector<Sensor>& sensors, double delta) {
  return graph_at_offset(road, sensors, -delta) == graph_at_offset(road, sensors, delta);
}

namespace {

// Raw feasible-placement membership; unlike Capsule this tolerates rho < w so
// uncoverable roads are detected rather than rejected.
bool placement_covers(Point p, const RoadSegment& r, double rho) {
  return point_segment_distance(p, r.side_top()) <= rho + epsilon() &&
         point_segment_distance(p, r.side_bottom()) <= rho + epsilon();
}

void candidate_points(const RoadSegment& r, double rho, DeployMode mode, double pitch,
                      std::vector<Point>& out) {
  if (mode == DeployMode::arbitrary) {
    Rect a = r.area();
    double x0 = a.x0 - rho, x1 = a.x1 + rho;
    double y0 = a.y0 - rho, y1 = a.y1 + rho;
    for (double x = x0; x <= x1 + pitch / 2; x += pitch)
      for (double y = y0; y <= y1 + pitch / 2; y += pitch)
        if (placement_covers({x, y}, r, rho)) out.push_back({x, y});
    return;
  }
  for (const LineSegment& seg : {r.side_top(), r.side_bottom()}) {
    double len = dist(seg.a, seg.b);
    Point dir = (1.0 / len) * (seg.b - seg.a);
    for (double t = 0; t < len; t += pitch) out.push_back(seg.a + t * dir);
    out.push_back(seg.b);
  }
}

bool cover_search(const std::vector<std::uint64_t>& masks, std::uint64_t uncovered, int budget,
                  std::vector<int>& chosen) {
  if (uncovered == 0) return true;
  if (budget == 0) return false;
  int road = std::countr_zero(uncovered);
  for (int c = 0; c < static_cast<int>(masks.size()); ++c) {
    if (!(masks[c] >> road & 1)) continue;
    chosen.push_back(c);
    if (cover_search(masks, uncovered & ~masks[c], budget - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

BruteForceResult brute_force_min_sensors(const std::vector<RoadSegment>& roads, double rho,
                                         DeployMode mode, double pitch) {
  if (roads.size() > 64) throw std::invalid_argument("brute force limited to 64 roads");
  std::vector<Point> cands;
  for (const auto& r : roads) candidate_points(r, rho, mode, pitch, cands);

  std::vector<std::uint64_t> masks;
  std::vector<Point> pts;
  std::uint64_t all = 0;
  for (Point p : cands) {
    std::uint64_t m = 0;
    for (size_t k = 0; k < roads.size(); ++k)
      if (placement_covers(p, roads[k], rho)) m |= std::uint64_t{1} << k;
    if (m == 0) continue;
    if (std::find(masks.begin(), masks.end(), m) != masks.end()) continue;
    masks.push_back(m);
    pts.push_back(p);
    all |= m;
  }
  for (size_t k = 0; k < roads.size(); ++k)
    if (!(all >> k & 1))
      throw std::runtime_error("road uncoverable at this rho: " + roads[k].id);

  BruteForceResult result;
  if (roads.empty()) return result;
  std::uint64_t target = (roads.size() == 64) ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << roads.size()) - 1;
  for (int k = 1;; ++k) {
    std::vector<int> chosen;
    if (cover_search(masks, target, k, chosen)) {
      result.count = k;
      int n = 0;
      for (int c : chosen) result.placement.push_back({"bf" + std::to_string(n++), pts[c], rho});
      return result;
    }
  }
}

}  // namespace roadcover
