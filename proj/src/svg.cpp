#include "roadcover/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace roadcover {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Capsule outline in the horizontal frame, arcs sampled with a fixed step so
// the output is plain line segments. Points run clockwise from the top-left.
std::vector<Point> capsule_outline(const RoadSegment& road, double rho) {
  constexpr int kArcSteps = 24;
  constexpr double kPi = 3.14159265358979323846;
  Rect r = road.area();
  double w = road.width;
  double reach = std::sqrt(std::max(rho * rho - (w / 2) * (w / 2), 0.0));
  double tip = std::atan2(w / 2, reach);  // lens tip angle seen from a corner
  std::vector<Point> pts;
  auto arc = [&](Point c, double from, double to) {
    for (int k = 0; k <= kArcSteps; ++k) {
      double t = from + (to - from) * k / kArcSteps;
      pts.push_back({c.x + rho * std::cos(t), c.y + rho * std::sin(t)});
    }
  };
  pts.push_back({r.x0, r.y0 + rho});  // top edge of the capsule (y0 + rho)
  pts.push_back({r.x1, r.y0 + rho});
  arc({r.x1, r.y0}, kPi / 2, tip);        // right lens, upper arc (bottom-right corner)
  arc({r.x1, r.y1}, -tip, -kPi / 2);      // right lens, lower arc (top-right corner)
  pts.push_back({r.x0, r.y1 - rho});      // bottom edge
  arc({r.x0, r.y1}, -kPi / 2, tip - kPi); // left lens, lower arc (top-left corner)
  arc({r.x0, r.y0}, kPi - tip, kPi / 2);  // left lens, upper arc (bottom-left corner)
  return pts;
}

}  // namespace

std::string render_svg(const Instance& inst, const Deployment* deployment, bool show_capsules) {
  std::vector<const RoadSegment*> roads;
  for (const auto& r : inst.roads) roads.push_back(&r);
  std::sort(roads.begin(), roads.end(),
            [](const RoadSegment* a, const RoadSegment* b) { return a->id < b->id; });

  std::vector<const Sensor*> sensors;
  for (const auto& s : inst.sensors) sensors.push_back(&s);
  if (deployment)
    for (const auto& s : deployment->placed) sensors.push_back(&s);
  std::sort(sensors.begin(), sensors.end(),
            [](const Sensor* a, const Sensor* b) { return a->id < b->id; });

  std::optional<double> capsule_radius;
  if (deployment) capsule_radius = deployment->radius;
  else if (inst.default_radius) capsule_radius = inst.default_radius;

  double margin = 0;
  for (const Sensor* s : sensors) margin = std::max(margin, s->radius);
  if (show_capsules && capsule_radius) margin = std::max(margin, *capsule_radius);

  const Region& reg = inst.region;
  double x0 = reg.x_min - margin, x1 = reg.x_max + margin;
  double y0 = reg.y_min - margin, y1 = reg.y_max + margin;
  // World y points up; SVG y points down.
  auto sy = [&](double y) { return y1 - y; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(x0) << " 0 "
      << num(x1 - x0) << " " << num(y1 - y0) << "\">\n";
  out << "<path d=\"M " << num(reg.x_min) << " " << num(sy(reg.y_min)) << " L " << num(reg.x_max)
      << " " << num(sy(reg.y_min)) << " L " << num(reg.x_max) << " " << num(sy(reg.y_max)) << " L "
      << num(reg.x_min) << " " << num(sy(reg.y_max))
      << " Z\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

  if (show_capsules && capsule_radius) {
    for (const RoadSegment* r : roads) {
      bool vertical = r->orientation == Orientation::vertical;
      std::vector<Point> pts = capsule_outline(to_horizontal_frame(*r), *capsule_radius);
      out << "<path d=\"";
      for (size_t i = 0; i < pts.size(); ++i) {
        Point p = vertical ? rotate_ccw(pts[i]) : pts[i];
        out << (i ? " L " : "M ") << num(p.x) << " " << num(sy(p.y));
      }
      out << " Z\" fill=\"none\" stroke=\"#2a9d8f\" stroke-width=\"0.5\"/>\n";
    }
  }

  for (const RoadSegment* r : roads) {
    Rect a = r->area();
    out << "<rect x=\"" << num(a.x0) << "\" y=\"" << num(sy(a.y1)) << "\" width=\""
        << num(a.x1 - a.x0) << "\" height=\"" << num(a.y1 - a.y0)
        << "\" fill=\"#c0c0c0\" stroke=\"#404040\" stroke-width=\"0.5\"/>\n";
  }
  for (const Sensor* s : sensors) {
    out << "<circle cx=\"" << num(s->center.x) << "\" cy=\"" << num(sy(s->center.y)) << "\" r=\""
        << num(s->radius) << "\" fill=\"none\" stroke=\"#d62828\" stroke-width=\"0.75\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace roadcover
