#pragma once

#include "brush/color.hpp"

namespace brush {

inline constexpr int kMaxCanvasSide = 4096;

/// Fixed coordinate system: origin top-left, x right, y down.
struct CanvasConfig {
  int width = 800;
  int height = 600;
  Rgba background = kWhite;

  bool valid() const {
    return width >= 1 && height >= 1 && width <= kMaxCanvasSide && height <= kMaxCanvasSide;
  }
  bool operator==(const CanvasConfig&) const = default;
};

}  // namespace brush
