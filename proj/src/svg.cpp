#include "brush/svg.hpp"

#include <numbers>

#include <fmt/format.h>

#include "brush/value.hpp"

namespace brush {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string num(double v) { return format_number(v); }

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string points(const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(pts[i].x) + "," + num(pts[i].y);
  }
  return out;
}

}  // namespace

std::string export_svg(const DisplayList& list, const CanvasConfig& canvas) {
  const std::string bg = to_hex(canvas.background);
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"{2}\"/>\n",
      canvas.width, canvas.height, bg);

  for (const auto& cmd : list) {
    const std::string color = to_hex(cmd.color);
    out += std::visit(
        overloaded{
            [&](const shape::Circle& s) {
              return fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>", num(s.cx),
                                 num(s.cy), num(s.r), color);
            },
            [&](const shape::Rect& s) {
              return fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
                                 num(s.x), num(s.y), num(s.w), num(s.h), color);
            },
            [&](const shape::Square& s) {
              return fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
                                 num(s.x), num(s.y), num(s.size), num(s.size), color);
            },
            [&](const shape::Star&) {
              return fmt::format("<polygon points=\"{}\" fill=\"{}\"/>", points(outline(cmd.shape)),
                                 color);
            },
            [&](const shape::RegularPolygon&) {
              return fmt::format("<polygon points=\"{}\" fill=\"{}\"/>", points(outline(cmd.shape)),
                                 color);
            },
            [&](const shape::Triangle&) {
              return fmt::format("<polygon points=\"{}\" fill=\"{}\"/>", points(outline(cmd.shape)),
                                 color);
            },
            [&](const shape::Semicircle& s) {
              // Arc from the right end, clockwise on screen, through the bottom.
              return fmt::format("<path d=\"M {} {} A {} {} 0 0 1 {} {} Z\" fill=\"{}\"/>",
                                 num(s.cx + s.r), num(s.cy), num(s.r), num(s.r), num(s.cx - s.r),
                                 num(s.cy), color);
            },
            [&](const shape::Oval& s) {
              return fmt::format(
                  "<ellipse cx=\"{0}\" cy=\"{1}\" rx=\"{2}\" ry=\"{3}\" "
                  "transform=\"rotate({4} {0} {1})\" fill=\"{5}\"/>",
                  num(s.cx), num(s.cy), num(s.rx), num(s.ry),
                  num(s.rotation * 180 / std::numbers::pi), color);
            },
            [&](const shape::Line& s) {
              return fmt::format(
                  "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>",
                  num(s.a.x), num(s.a.y), num(s.b.x), num(s.b.y), color);
            },
            [&](const shape::Curve& s) {
              return fmt::format(
                  "<path d=\"M {} {} Q {} {} {} {}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>",
                  num(s.a.x), num(s.a.y), num(s.control.x), num(s.control.y), num(s.b.x),
                  num(s.b.y), color);
            },
            [&](const shape::Text& s) {
              return fmt::format(
                  "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"16\" "
                  "fill=\"{}\">{}</text>",
                  num(s.x), num(s.y), color, escape(s.text));
            },
            [&](const shape::Clear& s) {
              return fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
                                 num(s.x), num(s.y), num(s.w), num(s.h), bg);
            },
        },
        cmd.shape);
    out += '\n';
  }
  out += "</svg>\n";
  return out;
}

}  // namespace brush
