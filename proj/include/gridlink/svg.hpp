#pragma once

#include <string>

#include "gridlink/grid.hpp"

namespace gridlink {

enum class RenderTarget : std::uint8_t { Diagram, Gamma, Front };

struct RenderOptions {
  OrientedType type = OrientedType::II_fwd;
  int cell = 40;  // pixels per grid step
};

// Diagram: grid plus vertices (filled = positive, hollow = negative).
// Gamma: one oriented path per staircase edge, crossings marked.
// Front: the TL front of the chosen type, horizontal strands broken under
// vertical ones. Output is deterministic.
std::string render_svg(const GridDiagram& d, RenderTarget target, const RenderOptions& opts = {});

}  // namespace gridlink
