#include "brush/geometry.hpp"

#include <cmath>
#include <numbers>

namespace brush {

std::vector<Point> regular_polygon_vertices(double cx, double cy, double size, int n) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * k / n;
    out.push_back({cx + size * std::cos(angle), cy + size * std::sin(angle)});
  }
  return out;
}

std::vector<Point> star_vertices(double cx, double cy, int spikes, double outer_r,
                                 double inner_r) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(2 * spikes));
  for (int k = 0; k < 2 * spikes; ++k) {
    const double angle = -std::numbers::pi / 2 + std::numbers::pi * k / spikes;
    const double r = k % 2 == 0 ? outer_r : inner_r;
    out.push_back({cx + r * std::cos(angle), cy + r * std::sin(angle)});
  }
  return out;
}

std::vector<Point> flatten_quadratic(Point p0, Point p1, Point p2, int segments) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(segments + 1));
  for (int k = 0; k <= segments; ++k) {
    const double t = static_cast<double>(k) / segments;
    const double u = 1 - t;
    out.push_back({u * u * p0.x + 2 * u * t * p1.x + t * t * p2.x,
                   u * u * p0.y + 2 * u * t * p1.y + t * t * p2.y});
  }
  return out;
}

std::vector<Point> stroke_segment(Point a, Point b, double half_width) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (len == 0) return {};
  const double nx = -dy / len * half_width;
  const double ny = dx / len * half_width;
  return {{a.x + nx, a.y + ny}, {b.x + nx, b.y + ny}, {b.x - nx, b.y - ny}, {a.x - nx, a.y - ny}};
}

}  // namespace brush
