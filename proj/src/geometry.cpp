#include "roadcover/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace roadcover {

namespace {
double g_eps = 1e-9;
}

double epsilon() { return g_eps; }

void set_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("epsilon must be a positive finite number");
  g_eps = eps;
}

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double norm(Point p) { return std::hypot(p.x, p.y); }
double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

LineSegment RoadSegment::side_top() const {
  Rect r = area();
  if (orientation == Orientation::horizontal) return {{r.x0, r.y1}, {r.x1, r.y1}};
  return {{r.x1, r.y0}, {r.x1, r.y1}};
}

LineSegment RoadSegment::side_bottom() const {
  Rect r = area();
  if (orientation == Orientation::horizontal) return {{r.x0, r.y0}, {r.x1, r.y0}};
  return {{r.x0, r.y0}, {r.x0, r.y1}};
}

LineSegment RoadSegment::end_left() const {
  Rect r = area();
  if (orientation == Orientation::horizontal) return {{r.x0, r.y0}, {r.x0, r.y1}};
  return {{r.x0, r.y0}, {r.x1, r.y0}};
}

LineSegment RoadSegment::end_right() const {
  Rect r = area();
  if (orientation == Orientation::horizontal) return {{r.x1, r.y0}, {r.x1, r.y1}};
  return {{r.x0, r.y1}, {r.x1, r.y1}};
}

RoadSegment to_horizontal_frame(const RoadSegment& r) {
  if (r.orientation == Orientation::horizontal) return r;
  // Region corners (x0,y0)..(x0+w, y0+L) map to x' in [y0, y0+L],
  // y' in [-x0-w, -x0].
  RoadSegment out = r;
  out.orientation = Orientation::horizontal;
  out.lo = {r.lo.y, -(r.lo.x + r.width)};
  return out;
}

double point_segment_distance(Point p, const LineSegment& s) {
  Point d = s.b - s.a;
  double len2 = dot(d, d);
  if (len2 == 0.0) return dist(p, s.a);
  double t = dot(p - s.a, d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, s.a + t * d);
}

double point_rect_distance(Point p, const Rect& r) {
  double dx = std::max({r.x0 - p.x, 0.0, p.x - r.x1});
  double dy = std::max({r.y0 - p.y, 0.0, p.y - r.y1});
  return std::hypot(dx, dy);
}

bool disk_intersects_segment(const Sensor& s, const LineSegment& seg) {
  return point_segment_distance(s.center, seg) <= s.radius + g_eps;
}

bool disk_intersects_rect(const Sensor& s, const Rect& r) {
  return point_rect_distance(s.center, r) <= s.radius + g_eps;
}

bool sensor_covers_road(const Sensor& s, const RoadSegment& r) {
  return disk_intersects_segment(s, r.side_top()) && disk_intersects_segment(s, r.side_bottom());
}

std::vector<Point> circle_circle_intersections(const Sensor& a, const Sensor& b) {
  double d = dist(a.center, b.center);
  if (d <= g_eps) {
    if (std::abs(a.radius - b.radius) <= g_eps)
      throw std::invalid_argument("degenerate: infinite intersection");
    return {};  // concentric, distinct radii
  }
  if (d > a.radius + b.radius + g_eps) return {};
  if (d < std::abs(a.radius - b.radius) - g_eps) return {};
  double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  double h2 = a.radius * a.radius - along * along;
  double h = std::sqrt(std::max(h2, 0.0));
  Point u = (1.0 / d) * (b.center - a.center);
  Point base = a.center + along * u;
  if (h <= g_eps) return {base};
  Point perp{-u.y, u.x};
  std::vector<Point> pts{base + h * perp, base - h * perp};
  std::sort(pts.begin(), pts.end(),
            [](Point p, Point q) { return p.x != q.x ? p.x < q.x : p.y < q.y; });
  return pts;
}

std::optional<std::pair<Point, Point>> disk_segment_chord(const Sensor& s, const LineSegment& seg) {
  if (!disk_intersects_segment(s, seg)) return std::nullopt;
  Point d = seg.b - seg.a;
  double a2 = dot(d, d);
  if (a2 == 0.0) return std::make_pair(seg.a, seg.a);
  Point f = seg.a - s.center;
  double b = 2.0 * dot(f, d);
  double c = dot(f, f) - s.radius * s.radius;
  double disc = b * b - 4.0 * a2 * c;
  if (disc <= 0.0) {
    double t = std::clamp(-b / (2.0 * a2), 0.0, 1.0);
    Point p = seg.a + t * d;
    return std::make_pair(p, p);
  }
  double sq = std::sqrt(disc);
  double t0 = std::clamp((-b - sq) / (2.0 * a2), 0.0, 1.0);
  double t1 = std::clamp((-b + sq) / (2.0 * a2), 0.0, 1.0);
  return std::make_pair(seg.a + t0 * d, seg.a + t1 * d);
}

// ---------------------------------------------------------------------------
// Convex-piece intersection machinery. A piece is an intersection of closed
// disks, axis-aligned boxes and axis-aligned half-planes. Two pieces share a
// point iff one of finitely many candidates lies in both: crossings of any
// two boundary curves (circles, vertical edge lines, horizontal edge lines),
// disk centers and box corners. Pieces are only ever built in the horizontal
// frame, so all line boundaries are axis-parallel.
// ---------------------------------------------------------------------------

namespace {

struct Hp {           // axis-aligned half-plane
  bool on_x = true;   // constrains x (else y)
  double bound = 0;
  int dir = 1;        // +1: coord >= bound, -1: coord <= bound
};

struct Piece {
  std::vector<Sensor> disks;  // id unused
  std::vector<Rect> boxes;
  std::vector<Hp> hps;

  bool contains(Point p, double eps) const {
    for (const auto& d : disks)
      if (dist(p, d.center) > d.radius + eps) return false;
    for (const auto& b : boxes)
      if (!b.contains(p, eps)) return false;
    for (const auto& h : hps) {
      double v = h.on_x ? p.x : p.y;
      if (h.dir > 0 ? v < h.bound - eps : v > h.bound + eps) return false;
    }
    return true;
  }
};

void circle_vline(const Sensor& d, double x, std::vector<Point>& out) {
  double dx = x - d.center.x;
  double h2 = d.radius * d.radius - dx * dx;
  if (h2 < -g_eps * (2.0 * d.radius + g_eps)) return;
  double h = std::sqrt(std::max(h2, 0.0));
  out.push_back({x, d.center.y + h});
  out.push_back({x, d.center.y - h});
}

void circle_hline(const Sensor& d, double y, std::vector<Point>& out) {
  double dy = y - d.center.y;
  double h2 = d.radius * d.radius - dy * dy;
  if (h2 < -g_eps * (2.0 * d.radius + g_eps)) return;
  double h = std::sqrt(std::max(h2, 0.0));
  out.push_back({d.center.x + h, y});
  out.push_back({d.center.x - h, y});
}

std::vector<Point> piece_candidates(const Piece& a, const Piece& b) {
  std::vector<Sensor> disks;
  std::vector<double> vlines, hlines;
  std::vector<Point> out;
  for (const Piece* p : {&a, &b}) {
    for (const auto& d : p->disks) {
      disks.push_back(d);
      out.push_back(d.center);
    }
    for (const auto& box : p->boxes) {
      vlines.push_back(box.x0);
      vlines.push_back(box.x1);
      hlines.push_back(box.y0);
      hlines.push_back(box.y1);
    }
    for (const auto& h : p->hps) (h.on_x ? vlines : hlines).push_back(h.bound);
  }
  for (size_t i = 0; i < disks.size(); ++i)
    for (size_t j = i + 1; j < disks.size(); ++j) {
      if (dist(disks[i].center, disks[j].center) <= g_eps) continue;
      for (Point p : circle_circle_intersections(disks[i], disks[j])) out.push_back(p);
    }
  for (const auto& d : disks) {
    for (double x : vlines) circle_vline(d, x, out);
    for (double y : hlines) circle_hline(d, y, out);
  }
  for (double x : vlines)
    for (double y : hlines) out.push_back({x, y});
  return out;
}

bool pieces_intersect(const Piece& a, const Piece& b, Point* witness = nullptr) {
  bool found = false;
  Point best{};
  for (Point p : piece_candidates(a, b)) {
    if (!a.contains(p, g_eps) || !b.contains(p, g_eps)) continue;
    if (!witness) return true;
    if (!found || p.x < best.x || (p.x == best.x && p.y < best.y)) best = p;
    found = true;
  }
  if (found && witness) *witness = best;
  return found;
}

// Decomposition of a horizontal-frame capsule into its rectangle part and the
// two end lenses (each a two-disk lens clipped at the end boundary).
std::array<Piece, 3> capsule_pieces(const RoadSegment& road, double rho) {
  Rect r = road.area();
  Piece rect_part;
  rect_part.boxes.push_back({r.x0, r.y1 - rho, r.x1, r.y0 + rho});
  Piece right_lens;
  right_lens.disks.push_back({"", {r.x1, r.y1}, rho});
  right_lens.disks.push_back({"", {r.x1, r.y0}, rho});
  right_lens.hps.push_back({true, r.x1, +1});
  Piece left_lens;
  left_lens.disks.push_back({"", {r.x0, r.y1}, rho});
  left_lens.disks.push_back({"", {r.x0, r.y0}, rho});
  left_lens.hps.push_back({true, r.x0, -1});
  return {rect_part, right_lens, left_lens};
}

}  // namespace

bool lens_intersects_rect(const Sensor& a, const Sensor& b, const RoadSegment& r) {
  Piece lens{{a, b}, {}, {}};
  Piece rect{{}, {r.area()}, {}};
  return pieces_intersect(lens, rect);
}

std::optional<Point> lens_rect_witness(const Sensor& a, const Sensor& b, const RoadSegment& r) {
  Piece lens{{a, b}, {}, {}};
  Piece rect{{}, {r.area()}, {}};
  Point w{};
  if (!pieces_intersect(lens, rect, &w)) return std::nullopt;
  return w;
}

bool capsule_contains(const Capsule& c, Point p) {
  if (c.radius < c.road.width - g_eps)
    throw std::invalid_argument("capsule radius below road width");
  return point_segment_distance(p, c.road.side_top()) <= c.radius + g_eps &&
         point_segment_distance(p, c.road.side_bottom()) <= c.radius + g_eps;
}

bool cap_contains(const Cap& c, Point p) {
  if (!capsule_contains({c.road, c.radius}, p)) return false;
  Rect r = c.road.area();
  if (c.road.orientation == Orientation::horizontal)
    return c.side == CapSide::right ? p.x >= r.x1 - g_eps : p.x <= r.x0 + g_eps;
  return c.side == CapSide::right ? p.y >= r.y1 - g_eps : p.y <= r.y0 + g_eps;
}

bool capsules_intersect(const Capsule& c1, const Capsule& c2) {
  if (c1.road.orientation != c2.road.orientation)
    throw std::invalid_argument("capsules_intersect: mixed orientations");
  if (std::abs(c1.radius - c2.radius) > g_eps)
    throw std::invalid_argument("capsules_intersect: unequal radii");
  if (c1.radius < c1.road.width - g_eps || c2.radius < c2.road.width - g_eps)
    throw std::invalid_argument("capsule radius below road width");
  RoadSegment r1 = to_horizontal_frame(c1.road);
  RoadSegment r2 = to_horizontal_frame(c2.road);
  auto parts1 = capsule_pieces(r1, c1.radius);
  auto parts2 = capsule_pieces(r2, c2.radius);
  for (const auto& p1 : parts1)
    for (const auto& p2 : parts2)
      if (pieces_intersect(p1, p2)) return true;
  return false;
}

bool segment_intersects_capsule(const LineSegment& seg, const Capsule& c) {
  if (c.radius < c.road.width - g_eps)
    throw std::invalid_argument("capsule radius below road width");
  // Work in the horizontal frame of the capsule's road.
  bool vertical_road = c.road.orientation == Orientation::vertical;
  RoadSegment road = to_horizontal_frame(c.road);
  Point a = vertical_road ? rotate_cw(seg.a) : seg.a;
  Point b = vertical_road ? rotate_cw(seg.b) : seg.b;
  Rect r = road.area();
  double yc = (r.y0 + r.y1) / 2;
  double w = road.width, rho = c.radius;
  if (std::abs(a.y - b.y) <= g_eps) {  // horizontal segment y = a.y
    double u = std::abs(a.y - yc) + w / 2;
    if (u > rho + g_eps) return false;
    double s = std::sqrt(std::max(rho * rho - u * u, 0.0));
    double lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
    return lo <= r.x1 + s + g_eps && hi >= r.x0 - s - g_eps;
  }
  if (std::abs(a.x - b.x) <= g_eps) {  // vertical segment x = a.x
    double dx = std::max({r.x0 - a.x, 0.0, a.x - r.x1});
    if (dx > rho + g_eps) return false;
    double t = std::sqrt(std::max(rho * rho - dx * dx, 0.0)) - w / 2;
    if (t < -g_eps) return false;
    t = std::max(t, 0.0);
    double lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
    return lo <= yc + t + g_eps && hi >= yc - t - g_eps;
  }
  throw std::invalid_argument("segment_intersects_capsule: segment not axis-parallel");
}

bool segment_within_disk(const LineSegment& seg, const Sensor& s) {
  // Disk convexity: endpoint containment suffices.
  return dist(seg.a, s.center) <= s.radius + g_eps && dist(seg.b, s.center) <= s.radius + g_eps;
}

}  // namespace roadcover
