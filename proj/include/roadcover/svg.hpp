#pragma once

#include <string>

#include "roadcover/deploy.hpp"
#include "roadcover/instance.hpp"

namespace roadcover {

// Deterministic SVG scene: region frame as a path, roads as filled rects
// (sorted by id), sensors as circle outlines (sorted by id), optional capsule
// outlines. Sensors come from the instance plus, when given, the deployment.
// Capsules are drawn at the deployment radius, falling back to the instance
// default_radius; without either they are skipped. The viewBox covers the
// region expanded by the largest drawn radius.
std::string render_svg(const Instance& inst, const Deployment* deployment, bool show_capsules);

}  // namespace roadcover
