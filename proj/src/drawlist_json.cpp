#include "brush/drawlist_json.hpp"

#include <cmath>

#include <fmt/format.h>

namespace brush {

namespace {

using json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void fail(const std::string& what) { throw DrawListError(what); }

double number(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(fmt::format("{}: missing \"{}\"", where, key));
  if (!it->is_number()) fail(fmt::format("{}: \"{}\" must be a number", where, key));
  const double v = it->get<double>();
  if (!std::isfinite(v)) fail(fmt::format("{}: \"{}\" must be finite", where, key));
  return v;
}

int whole(const json& obj, const char* key, int lo, int hi, const std::string& where) {
  const double v = number(obj, key, where);
  if (v != std::floor(v) || v < lo || v > hi)
    fail(fmt::format("{}: \"{}\" must be a whole number from {} to {}", where, key, lo, hi));
  return static_cast<int>(v);
}

Point point(const json& obj, const char* kx, const char* ky, const std::string& where) {
  return {number(obj, kx, where), number(obj, ky, where)};
}

DrawCommand command_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where + ": command must be an object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) fail(where + ": missing \"kind\"");
  const std::string kind = kind_it->get<std::string>();

  Rgba color = kWhite;
  if (kind != "clear") {
    auto c = j.find("color");
    if (c == j.end() || !c->is_string()) fail(where + ": missing \"color\"");
    const auto parsed = try_parse_color(c->get<std::string>());
    if (!parsed) fail(where + ": bad color");
    color = *parsed;
  }

  auto n = [&](const char* key) { return number(j, key, where); };
  Shape s;
  if (kind == "circle") {
    s = shape::Circle{n("cx"), n("cy"), n("r")};
  } else if (kind == "rect") {
    s = shape::Rect{n("x"), n("y"), n("w"), n("h")};
  } else if (kind == "square") {
    s = shape::Square{n("x"), n("y"), n("size")};
  } else if (kind == "star") {
    s = shape::Star{n("cx"), n("cy"), whole(j, "spikes", 2, 100, where), n("outerR"), n("innerR")};
  } else if (kind == "polygon") {
    s = shape::RegularPolygon{n("cx"), n("cy"), n("size"), whole(j, "sides", 3, 100, where)};
  } else if (kind == "triangle") {
    s = shape::Triangle{point(j, "x1", "y1", where), point(j, "x2", "y2", where),
                        point(j, "x3", "y3", where)};
  } else if (kind == "semicircle") {
    s = shape::Semicircle{n("cx"), n("cy"), n("r")};
  } else if (kind == "oval") {
    s = shape::Oval{n("cx"), n("cy"), n("rx"), n("ry"), n("rotation")};
  } else if (kind == "line") {
    s = shape::Line{point(j, "x1", "y1", where), point(j, "x2", "y2", where)};
  } else if (kind == "curve") {
    s = shape::Curve{point(j, "x1", "y1", where), point(j, "x2", "y2", where),
                     point(j, "x3", "y3", where)};
  } else if (kind == "text") {
    auto t = j.find("text");
    if (t == j.end() || !t->is_string()) fail(where + ": missing \"text\"");
    s = shape::Text{n("x"), n("y"), t->get<std::string>()};
  } else if (kind == "clear") {
    s = shape::Clear{n("x"), n("y"), n("w"), n("h")};
  } else {
    fail(fmt::format("{}: unknown kind \"{}\"", where, kind));
  }
  return {std::move(s), color};
}

}  // namespace

json command_to_json(const DrawCommand& cmd) {
  json j;
  j["kind"] = kind_name(cmd);
  std::visit(overloaded{
                 [&](const shape::Circle& s) {
                   j["cx"] = s.cx;
                   j["cy"] = s.cy;
                   j["r"] = s.r;
                 },
                 [&](const shape::Rect& s) {
                   j["x"] = s.x;
                   j["y"] = s.y;
                   j["w"] = s.w;
                   j["h"] = s.h;
                 },
                 [&](const shape::Square& s) {
                   j["x"] = s.x;
                   j["y"] = s.y;
                   j["size"] = s.size;
                 },
                 [&](const shape::Star& s) {
                   j["cx"] = s.cx;
                   j["cy"] = s.cy;
                   j["spikes"] = s.spikes;
                   j["outerR"] = s.outer_r;
                   j["innerR"] = s.inner_r;
                 },
                 [&](const shape::RegularPolygon& s) {
                   j["cx"] = s.cx;
                   j["cy"] = s.cy;
                   j["size"] = s.size;
                   j["sides"] = s.sides;
                 },
                 [&](const shape::Triangle& s) {
                   j["x1"] = s.a.x;
                   j["y1"] = s.a.y;
                   j["x2"] = s.b.x;
                   j["y2"] = s.b.y;
                   j["x3"] = s.c.x;
                   j["y3"] = s.c.y;
                 },
                 [&](const shape::Semicircle& s) {
                   j["cx"] = s.cx;
                   j["cy"] = s.cy;
                   j["r"] = s.r;
                 },
                 [&](const shape::Oval& s) {
                   j["cx"] = s.cx;
                   j["cy"] = s.cy;
                   j["rx"] = s.rx;
                   j["ry"] = s.ry;
                   j["rotation"] = s.rotation;
                 },
                 [&](const shape::Line& s) {
                   j["x1"] = s.a.x;
                   j["y1"] = s.a.y;
                   j["x2"] = s.b.x;
                   j["y2"] = s.b.y;
                 },
                 [&](const shape::Curve& s) {
                   j["x1"] = s.a.x;
                   j["y1"] = s.a.y;
                   j["x2"] = s.control.x;
                   j["y2"] = s.control.y;
                   j["x3"] = s.b.x;
                   j["y3"] = s.b.y;
                 },
                 [&](const shape::Text& s) {
                   j["x"] = s.x;
                   j["y"] = s.y;
                   j["text"] = s.text;
                 },
                 [&](const shape::Clear& s) {
                   j["x"] = s.x;
                   j["y"] = s.y;
                   j["w"] = s.w;
                   j["h"] = s.h;
                 },
             },
             cmd.shape);
  if (!std::holds_alternative<shape::Clear>(cmd.shape)) j["color"] = to_hex(cmd.color);
  return j;
}

json frame_to_json(const DisplayList& frame) {
  json arr = json::array();
  for (const auto& cmd : frame) arr.push_back(command_to_json(cmd));
  return arr;
}

std::string serialize_drawlist(std::span<const DisplayList> frames, const CanvasConfig& canvas) {
  json doc;
  doc["version"] = kDrawListVersion;
  doc["canvas"] = {{"width", canvas.width}, {"height", canvas.height}};
  json arr = json::array();
  for (const auto& f : frames) arr.push_back(frame_to_json(f));
  doc["frames"] = std::move(arr);
  return doc.dump(-1, ' ', false, json::error_handler_t::replace);
}

DrawList parse_drawlist(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  auto version = doc.find("version");
  if (version == doc.end() || !version->is_number_integer() || version->get<int>() != kDrawListVersion)
    fail("\"version\" must be 1");

  DrawList out;
  auto canvas = doc.find("canvas");
  if (canvas == doc.end() || !canvas->is_object()) fail("missing \"canvas\"");
  out.canvas.width = whole(*canvas, "width", 1, kMaxCanvasSide, "canvas");
  out.canvas.height = whole(*canvas, "height", 1, kMaxCanvasSide, "canvas");

  auto frames = doc.find("frames");
  if (frames == doc.end() || !frames->is_array()) fail("missing \"frames\"");
  for (std::size_t f = 0; f < frames->size(); ++f) {
    const json& frame = (*frames)[f];
    if (!frame.is_array()) fail(fmt::format("frames[{}] must be an array", f));
    DisplayList list;
    list.reserve(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i)
      list.push_back(command_from_json(frame[i], fmt::format("frames[{}][{}]", f, i)));
    out.frames.push_back(std::move(list));
  }
  return out;
}

}  // namespace brush
