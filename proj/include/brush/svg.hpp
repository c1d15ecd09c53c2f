#pragma once

#include <string>

#include "brush/canvas.hpp"
#include "brush/draw_command.hpp"

namespace brush {

/// SVG 1.1 document: a background rect, then one element per command.
/// Polygon points come from the same vertex functions the rasterizer uses.
std::string export_svg(const DisplayList& list, const CanvasConfig& canvas = {});

}  // namespace brush
