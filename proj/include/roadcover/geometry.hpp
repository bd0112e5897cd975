#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roadcover {

// Global tolerance for all region predicates. Closed semantics throughout:
// tangency and touching count as intersecting.
double epsilon();
void set_epsilon(double eps);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
double dot(Point a, Point b);
double norm(Point p);
double dist(Point a, Point b);

// Rotations used to map vertical constructions onto the horizontal code path.
// rotate_cw maps "up" to "right": (x,y) -> (y,-x); rotate_ccw is its inverse.
inline Point rotate_cw(Point p) { return {p.y, -p.x}; }
inline Point rotate_ccw(Point p) { return {-p.y, p.x}; }

struct LineSegment {
  Point a;
  Point b;
};

struct Rect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  bool contains(Point p, double eps) const {
    return p.x >= x0 - eps && p.x <= x1 + eps && p.y >= y0 - eps && p.y <= y1 + eps;
  }
};

enum class Orientation { horizontal, vertical };

// Axis-parallel rectangular road segment: two equal-length parallel side
// boundaries separated by `width`, extending `length` along the orientation
// axis from the min corner `lo`.
struct RoadSegment {
  std::string id;
  Orientation orientation = Orientation::horizontal;
  Point lo;
  double length = 0.0;
  double width = 0.0;

  Rect area() const {
    if (orientation == Orientation::horizontal)
      return {lo.x, lo.y, lo.x + length, lo.y + width};
    return {lo.x, lo.y, lo.x + width, lo.y + length};
  }
  // Side boundaries. For a vertical road "top" is the right edge (x = max),
  // which maps onto the top edge under rotate_cw.
  LineSegment side_top() const;
  LineSegment side_bottom() const;
  // End boundaries are the two short edges of length `width`.
  LineSegment end_left() const;
  LineSegment end_right() const;
  // Coordinate of the trailing end along the orientation axis (right end for
  // horizontal roads, top end for vertical ones).
  double trailing_end() const {
    return orientation == Orientation::horizontal ? lo.x + length : lo.y + length;
  }
  // Center coordinate across the orientation axis.
  double cross_center() const {
    return orientation == Orientation::horizontal ? lo.y + width / 2 : lo.x + width / 2;
  }
};

// Maps a vertical road onto the horizontal frame (rotate_cw applied to its
// region). Horizontal roads pass through unchanged.
RoadSegment to_horizontal_frame(const RoadSegment& r);

struct Sensor {
  std::string id;
  Point center;
  double radius = 0.0;
};

// Feasible-placement region for independently covering `road` with a sensor
// of range `radius`: all points within `radius` of both side boundaries.
struct Capsule {
  RoadSegment road;
  double radius = 0.0;
};

enum class CapSide { left, right };

// Lobe of a capsule beyond an end boundary. For vertical roads `right` means
// the top end.
struct Cap {
  RoadSegment road;
  double radius = 0.0;
  CapSide side = CapSide::right;
};

double point_segment_distance(Point p, const LineSegment& s);
double point_rect_distance(Point p, const Rect& r);

bool disk_intersects_segment(const Sensor& s, const LineSegment& seg);
bool disk_intersects_rect(const Sensor& s, const Rect& r);

// A sensor independently covers a road iff its disk meets both side
// boundaries.
bool sensor_covers_road(const Sensor& s, const RoadSegment& r);

// Points common to both circle boundaries, sorted by (x, y). Empty when the
// disks are disjoint or nested; a single point at tangency. Throws
// std::invalid_argument("degenerate: infinite intersection") for coincident
// centers with equal radii.
std::vector<Point> circle_circle_intersections(const Sensor& a, const Sensor& b);

// Chord of `seg` inside the closed disk, clamped to the segment; nullopt when
// the disk misses the segment.
std::optional<std::pair<Point, Point>> disk_segment_chord(const Sensor& s, const LineSegment& seg);

// Does the lens disk(a) ∩ disk(b) share a point with the closed rectangle of
// `r`? Exact: the decision is witnessed by a finite candidate set (boundary
// crossings, lens vertices, rectangle corners, disk centers).
bool lens_intersects_rect(const Sensor& a, const Sensor& b, const RoadSegment& r);
// Same decision, returning the lexicographically smallest witness point.
std::optional<Point> lens_rect_witness(const Sensor& a, const Sensor& b, const RoadSegment& r);

bool capsule_contains(const Capsule& c, Point p);
bool cap_contains(const Cap& c, Point p);

// Closed-region intersection of two capsules. Pre: same orientation, equal
// radius, radius >= both widths. Decided exactly via the rectangle + two-lens
// decomposition of each capsule.
bool capsules_intersect(const Capsule& c1, const Capsule& c2);

// Pre: seg axis-parallel, same orientation rules as the capsule's road.
bool segment_intersects_capsule(const LineSegment& seg, const Capsule& c);

bool segment_within_disk(const LineSegment& seg, const Sensor& s);

}  // namespace roadcover
