#include "brush/draw_command.hpp"

namespace brush {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string_view kind_name(const DrawCommand& cmd) {
  return std::visit(
      overloaded{[](const shape::Circle&) { return "circle"; },
                 [](const shape::Rect&) { return "rect"; },
                 [](const shape::Square&) { return "square"; },
                 [](const shape::Star&) { return "star"; },
                 [](const shape::RegularPolygon&) { return "polygon"; },
                 [](const shape::Triangle&) { return "triangle"; },
                 [](const shape::Semicircle&) { return "semicircle"; },
                 [](const shape::Oval&) { return "oval"; },
                 [](const shape::Line&) { return "line"; },
                 [](const shape::Curve&) { return "curve"; },
                 [](const shape::Text&) { return "text"; },
                 [](const shape::Clear&) { return "clear"; }},
      cmd.shape);
}

std::vector<Point> outline(const Shape& s) {
  if (const auto* star = std::get_if<shape::Star>(&s))
    return star_vertices(star->cx, star->cy, star->spikes, star->outer_r, star->inner_r);
  if (const auto* poly = std::get_if<shape::RegularPolygon>(&s))
    return regular_polygon_vertices(poly->cx, poly->cy, poly->size, poly->sides);
  if (const auto* tri = std::get_if<shape::Triangle>(&s)) return {tri->a, tri->b, tri->c};
  return {};
}

}  // namespace brush
