#pragma once

#include <vector>

namespace brush {

struct Point {
  double x = 0;
  double y = 0;

  bool operator==(const Point&) const = default;
};

/// `n` vertices on the circle of radius `size` around (cx, cy). The first
/// vertex points straight up (screen y grows downward) and the angle grows
/// by 2π/n per vertex.
std::vector<Point> regular_polygon_vertices(double cx, double cy, double size, int n);

/// 2·spikes vertices alternating outer and inner radius, starting straight
/// up with an angular step of π/spikes.
std::vector<Point> star_vertices(double cx, double cy, int spikes, double outer_r, double inner_r);

/// Samples of the quadratic Bezier p0-p1-p2 at t = k/segments, k = 0..segments.
std::vector<Point> flatten_quadratic(Point p0, Point p1, Point p2, int segments = 32);

/// The oriented rectangle covering a segment stroked with the given
/// half-width and butt caps. Empty for a zero-length segment.
std::vector<Point> stroke_segment(Point a, Point b, double half_width);

inline constexpr int kCurveSegments = 32;
inline constexpr double kStrokeHalfWidth = 1.0;

}  // namespace brush
