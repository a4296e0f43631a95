#pragma once

// Minimal SVG 1.1 rendering of stability diagrams: white stable cells, grey
// unstable cells, black boundary cells, with boundary polylines overlaid in
// black.  Output is plain-text and byte-deterministic for a fixed input.

#include "strutt/stability.hpp"

#include <string>
#include <vector>

namespace strutt::svg {

std::string render_diagram(const stability::DiagramGrid& grid,
                           const std::vector<stability::BoundaryCurve>& overlays = {});

} // namespace strutt::svg
