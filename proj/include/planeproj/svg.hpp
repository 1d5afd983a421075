#pragma once

#include <string>

#include "planeproj/embedding.hpp"

namespace planeproj {

/// SVG 1.1 drawing of one plane: every vertex as a labelled circle, the
/// plane's assigned edges as lines. Coordinates are fitted into a 1000x1000
/// viewBox with the aspect ratio kept and printed with 6 decimals, so equal
/// input gives byte-identical output. Throws BAD_PLANE.
std::string render_svg(const PlaneProjection& pp, PlanePair plane);

}  // namespace planeproj
