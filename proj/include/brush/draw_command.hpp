#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "brush/color.hpp"
#include "brush/geometry.hpp"

namespace brush {

namespace shape {

struct Circle {
  double cx, cy, r;
  bool operator==(const Circle&) const = default;
};
struct Rect {
  double x, y, w, h;
  bool operator==(const Rect&) const = default;
};
/// Top-left corner plus side length.
struct Square {
  double x, y, size;
  bool operator==(const Square&) const = default;
};
struct Star {
  double cx, cy;
  int spikes;
  double outer_r, inner_r;
  bool operator==(const Star&) const = default;
};
/// Pentagon through octagon; `size` is the circumradius.
struct RegularPolygon {
  double cx, cy, size;
  int sides;
  bool operator==(const RegularPolygon&) const = default;
};
struct Triangle {
  Point a, b, c;
  bool operator==(const Triangle&) const = default;
};
/// Half-disc below the center line (flat edge on top).
struct Semicircle {
  double cx, cy, r;
  bool operator==(const Semicircle&) const = default;
};
/// Rotation in radians, clockwise on screen.
struct Oval {
  double cx, cy, rx, ry, rotation;
  bool operator==(const Oval&) const = default;
};
struct Line {
  Point a, b;
  bool operator==(const Line&) const = default;
};
/// Quadratic Bezier: start, control, end.
struct Curve {
  Point a, control, b;
  bool operator==(const Curve&) const = default;
};
/// Baseline-left anchored text.
struct Text {
  double x, y;
  std::string text;
  bool operator==(const Text&) const = default;
};
/// Repaints a rectangle with the background.
struct Clear {
  double x, y, w, h;
  bool operator==(const Clear&) const = default;
};

}  // namespace shape

using Shape = std::variant<shape::Circle, shape::Rect, shape::Square, shape::Star,
                           shape::RegularPolygon, shape::Triangle, shape::Semicircle, shape::Oval,
                           shape::Line, shape::Curve, shape::Text, shape::Clear>;

struct DrawCommand {
  Shape shape;
  /// Ignored for Clear, which always uses the background.
  Rgba color = kWhite;

  bool operator==(const DrawCommand&) const = default;
};

using DisplayList = std::vector<DrawCommand>;

/// Draw-list kind name: circle, rect, square, star, polygon, triangle,
/// semicircle, oval, line, curve, text or clear.
std::string_view kind_name(const DrawCommand& cmd);

/// Filled outline of polygon-like shapes (star, polygon, triangle).
/// Empty for every other kind.
std::vector<Point> outline(const Shape& shape);

}  // namespace brush
