#include "brush/builtins.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <json.hpp>

#include "brush/diagnostics.hpp"
#include "brush/environment.hpp"

namespace brush {

namespace {

using K = ParamKind;

constexpr ParamSpec kNum(std::string_view n) { return {n, K::Number, false}; }
constexpr ParamSpec kSize(std::string_view n) { return {n, K::Number, true}; }
constexpr ParamSpec kColor{"color", K::Color, false};

constexpr std::array kCircle = {kNum("x"), kNum("y"), kSize("radius"), kColor};
constexpr std::array kRect = {kNum("x"), kNum("y"), kSize("width"), kSize("height"), kColor};
constexpr std::array kSquare = {kNum("x"), kNum("y"), kSize("size"), kColor};
constexpr std::array kStar = {kNum("cx"),     kNum("cy"),     kSize("spikes"),
                              kSize("outerR"), kSize("innerR"), kColor};
constexpr std::array kTriangle = {kNum("x1"), kNum("y1"), kNum("x2"), kNum("y2"),
                                  kNum("x3"), kNum("y3"), kColor};
constexpr std::array kOval = {kNum("x"),           kNum("y"),        kSize("radiusX"),
                              kSize("radiusY"), kNum("rotation"), kColor};
constexpr std::array kLine = {kNum("x1"), kNum("y1"), kNum("x2"), kNum("y2"), kColor};
constexpr std::array kText = {ParamSpec{"text", K::Text, false}, kNum("x"), kNum("y"), kColor};
constexpr std::array kClearRect = {kNum("x"), kNum("y"), kSize("width"), kSize("height")};
constexpr std::array kCallback = {ParamSpec{"callback", K::Function, false}};
constexpr std::array kOneNumber = {kNum("x")};
constexpr std::array kValues = {kNum("value")};
constexpr std::array kItem = {ParamSpec{"item", K::Any, false}};
constexpr std::span<const ParamSpec> kNone{};

using G = BuiltinGroup;
using B = BuiltinId;

const std::array kRegistry = {
    BuiltinSpec{B::DrawCircle, "drawCircle", G::Drawing, kCircle, false, "circle",
                "Filled circle centered at (x, y).", true},
    BuiltinSpec{B::DrawRect, "drawRect", G::Drawing, kRect, false, "rect",
                "Filled rectangle with its top-left corner at (x, y).", true},
    BuiltinSpec{B::DrawSquare, "drawSquare", G::Drawing, kSquare, false, "square",
                "Filled square with its top-left corner at (x, y).", true},
    BuiltinSpec{B::DrawStar, "drawStar", G::Drawing, kStar, false, "star",
                "Star with the given number of points, centered at (cx, cy).", true},
    BuiltinSpec{B::DrawHexagon, "drawHexagon", G::Drawing, kSquare, false, "polygon",
                "Six-sided shape centered at (x, y); size is the distance to each corner.", true},
    BuiltinSpec{B::DrawPentagon, "drawPentagon", G::Drawing, kSquare, false, "polygon",
                "Five-sided shape centered at (x, y).", true},
    BuiltinSpec{B::DrawHeptagon, "drawHeptagon", G::Drawing, kSquare, false, "polygon",
                "Seven-sided shape centered at (x, y).", true},
    BuiltinSpec{B::DrawOctagon, "drawOctagon", G::Drawing, kSquare, false, "polygon",
                "Eight-sided shape centered at (x, y).", true},
    BuiltinSpec{B::DrawTriangle, "drawTriangle", G::Drawing, kTriangle, false, "triangle",
                "Filled triangle through three corners.", true},
    BuiltinSpec{B::DrawSemicircle, "drawSemicircle", G::Drawing, kCircle, false, "semicircle",
                "Half a circle hanging below (x, y), flat side on top.", true},
    BuiltinSpec{B::DrawOval, "drawOval", G::Drawing, kOval, false, "oval",
                "Filled ellipse; rotation is in radians, like Math.cos.", true},
    BuiltinSpec{B::DrawLine, "drawLine", G::Drawing, kLine, false, "line",
                "Straight line from (x1, y1) to (x2, y2).", true},
    BuiltinSpec{B::DrawCurve, "drawCurve", G::Drawing, kTriangle, false, "curve",
                "Curve from (x1, y1) to (x3, y3), pulled toward (x2, y2).", true},
    BuiltinSpec{B::DrawText, "drawText", G::Drawing, kText, false, "text",
                "Writes text with its baseline starting at (x, y).", true},
    BuiltinSpec{B::RandomColor, "randomColor", G::Color, kNone, false, "",
                "Gives back a random color like '#3FA2C8'.", true},
    BuiltinSpec{B::ClearCanvas, "clearCanvas", G::Canvas, kNone, false, "clear",
                "Wipes the whole canvas back to white.", false},
    BuiltinSpec{B::CtxClearRect, "ctx.clearRect", G::Canvas, kClearRect, false, "clear",
                "Wipes a rectangle back to white.", false},
    BuiltinSpec{B::RequestAnimationFrame, "requestAnimationFrame", G::Animation, kCallback,
                false, "", "Runs the given function again for the next frame.", false},
    BuiltinSpec{B::MathCos, "Math.cos", G::Math, kOneNumber, false, "", "Cosine of an angle in radians.", false},
    BuiltinSpec{B::MathSin, "Math.sin", G::Math, kOneNumber, false, "", "Sine of an angle in radians.", false},
    BuiltinSpec{B::MathFloor, "Math.floor", G::Math, kOneNumber, false, "", "Rounds down.", false},
    BuiltinSpec{B::MathCeil, "Math.ceil", G::Math, kOneNumber, false, "", "Rounds up.", false},
    BuiltinSpec{B::MathRound, "Math.round", G::Math, kOneNumber, false, "", "Rounds to the nearest whole number.", false},
    BuiltinSpec{B::MathAbs, "Math.abs", G::Math, kOneNumber, false, "", "Distance from zero.", false},
    BuiltinSpec{B::MathSqrt, "Math.sqrt", G::Math, kOneNumber, false, "", "Square root.", false},
    BuiltinSpec{B::MathMin, "Math.min", G::Math, kValues, true, "", "Smallest of the values.", false},
    BuiltinSpec{B::MathMax, "Math.max", G::Math, kValues, true, "", "Largest of the values.", false},
    BuiltinSpec{B::MathRandom, "Math.random", G::Math, kNone, false, "",
                "Random number from 0 up to (not including) 1.", false},
    BuiltinSpec{B::ListPush, "push", G::List, kItem, false, "", "Adds an item to the end of a list.",
                false},
};

constexpr std::array<std::string_view, 10> kMathMembers = {
    "cos", "sin", "floor", "ceil", "round", "abs", "sqrt", "min", "max", "random"};

std::string describe_kind(ParamKind kind) {
  switch (kind) {
    case K::Number: return "a number";
    case K::Color: return "a color in quotes, like 'red'";
    case K::Text: return "words in quotes, like 'hello'";
    case K::Function: return "a function name";
    case K::Any: return "a value";
  }
  return "a value";
}

std::string_view kind_json(ParamKind kind) {
  switch (kind) {
    case K::Number: return "number";
    case K::Color: return "string-color";
    case K::Text: return "string-text";
    case K::Function: return "function";
    case K::Any: return "any";
  }
  return "any";
}

double number_arg(const ParamSpec& p, const Value& v, std::size_t index) {
  if (!v.is_number())
    raise(DiagCode::WrongArgType, {std::string(p.name), describe_kind(p.kind), std::string(v.type_name())},
          std::nullopt, index);
  const double x = v.as_number();
  if (!std::isfinite(x))
    raise(DiagCode::NotDrawableNumber, {std::string(p.name), format_number(x)}, std::nullopt, index);
  if (p.positive && !(x > 0))
    raise(DiagCode::NotPositive, {std::string(p.name), format_number(x)}, std::nullopt, index);
  return x;
}

double js_round(double x) {
  const double f = std::floor(x);
  return x - f >= 0.5 ? f + 1 : f;
}

}  // namespace

std::string BuiltinSpec::param_list() const {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += params[i].name;
  }
  if (variadic) out += ", ...";
  return out;
}

std::string BuiltinSpec::signature() const { return fmt::format("{}({})", name, param_list()); }

std::span<const BuiltinSpec> builtin_registry() { return kRegistry; }

const BuiltinSpec& builtin(BuiltinId id) { return kRegistry[static_cast<std::size_t>(id)]; }

const BuiltinSpec* find_builtin(std::string_view name) {
  for (const auto& b : kRegistry)
    if (b.name == name) return &b;
  return nullptr;
}

void register_builtins(Scope& global) {
  for (const auto& b : kRegistry) {
    if (b.group == G::Math || b.group == G::List || b.id == B::CtxClearRect) continue;
    global.declare(std::string(b.name), Value(FunctionRef{nullptr, nullptr, &b, nullptr}), false,
                   true);
  }
  global.declare("Math", Value(Namespace::Math), false, true);
  global.declare("canvas", Value(Namespace::Canvas), false, true);
  global.declare("ctx", Value(Namespace::Ctx), false, true);
}

std::vector<std::string> arity_parts(std::string_view name, std::size_t count, bool variadic,
                                     const std::string& params) {
  std::string phrase;
  if (variadic) {
    phrase = fmt::format("at least {} value{}", count, count == 1 ? "" : "s");
  } else if (count == 0) {
    phrase = "no values";
  } else {
    phrase = fmt::format("{} value{}", count, count == 1 ? "" : "s");
  }
  std::string tail = count && !variadic ? ": " + params : "";
  return {std::string(name), std::move(phrase), std::move(tail)};
}

std::string arity_message(const BuiltinSpec& spec) {
  return make_diagnostic(DiagCode::WrongArgCount, SourceSpan{},
                         arity_parts(spec.name, spec.arity(), spec.variadic, spec.param_list()))
      .message;
}

void raise_wrong_count(const BuiltinSpec& spec, std::size_t given) {
  raise(DiagCode::WrongArgCount,
        arity_parts(spec.name, spec.arity(), spec.variadic, spec.param_list()),
        fmt::format("You gave it {}.", given));
}

DrawCommand validate_and_emit(const BuiltinSpec& spec, std::span<const Value> args,
                              const CanvasConfig& canvas) {
  if (!spec.is_drawing()) throw std::logic_error("validate_and_emit on a non-drawing builtin");
  if (args.size() != spec.arity()) raise_wrong_count(spec, args.size());

  std::array<double, 8> num{};
  std::string text;
  Rgba color = kWhite;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const ParamSpec& p = spec.params[i];
    const Value& v = args[i];
    switch (p.kind) {
      case K::Number: num[i] = number_arg(p, v, i); break;
      case K::Color:
        if (!v.is_string())
          raise(DiagCode::WrongArgType, {"color", describe_kind(p.kind), std::string(v.type_name())},
                std::nullopt, i);
        try {
          color = parse_color(v.as_string());
        } catch (ScriptError& e) {
          throw ScriptError(e.diagnostic(), i);
        }
        break;
      case K::Text:
        if (!v.is_string())
          raise(DiagCode::WrongArgType, {std::string(p.name), describe_kind(p.kind), std::string(v.type_name())},
                std::nullopt, i);
        text = v.as_string();
        break;
      default: break;
    }
  }

  auto polygon = [&](int sides) {
    return DrawCommand{shape::RegularPolygon{num[0], num[1], num[2], sides}, color};
  };

  switch (spec.id) {
    case B::DrawCircle: return {shape::Circle{num[0], num[1], num[2]}, color};
    case B::DrawRect: return {shape::Rect{num[0], num[1], num[2], num[3]}, color};
    case B::DrawSquare: return {shape::Square{num[0], num[1], num[2]}, color};
    case B::DrawStar: {
      const double spikes = num[2];
      if (spikes != std::floor(spikes) || spikes < 2 || spikes > 100)
        raise(DiagCode::BadSpikes, {format_number(spikes)}, std::nullopt, 2);
      if (!(num[4] < num[3]))
        raise(DiagCode::StarRadii, {format_number(num[4]), format_number(num[3])},
              "The points of a star reach outerR; the dips between them reach innerR.", 4);
      return {shape::Star{num[0], num[1], static_cast<int>(spikes), num[3], num[4]}, color};
    }
    case B::DrawHexagon: return polygon(6);
    case B::DrawPentagon: return polygon(5);
    case B::DrawHeptagon: return polygon(7);
    case B::DrawOctagon: return polygon(8);
    case B::DrawTriangle:
      return {shape::Triangle{{num[0], num[1]}, {num[2], num[3]}, {num[4], num[5]}}, color};
    case B::DrawSemicircle: return {shape::Semicircle{num[0], num[1], num[2]}, color};
    case B::DrawOval: return {shape::Oval{num[0], num[1], num[2], num[3], num[4]}, color};
    case B::DrawLine: return {shape::Line{{num[0], num[1]}, {num[2], num[3]}}, color};
    case B::DrawCurve:
      return {shape::Curve{{num[0], num[1]}, {num[2], num[3]}, {num[4], num[5]}}, color};
    case B::DrawText: return {shape::Text{num[1], num[2], text}, color};
    case B::ClearCanvas:
      return {shape::Clear{0, 0, static_cast<double>(canvas.width),
                           static_cast<double>(canvas.height)},
              canvas.background};
    case B::CtxClearRect:
      return {shape::Clear{num[0], num[1], num[2], num[3]}, canvas.background};
    default: break;
  }
  throw std::logic_error("unhandled drawing builtin");
}

std::string random_color(SplitMix64& rng) {
  return fmt::format("#{:06X}", rng.next() >> 40);
}

Value math_member(std::string_view member) {
  if (member == "PI") return Value(std::numbers::pi);
  if (const BuiltinSpec* b = find_builtin(fmt::format("Math.{}", member)))
    return Value(FunctionRef{nullptr, nullptr, b, nullptr});
  raise(DiagCode::UnknownMathMember, {std::string(member)});
}

Value math_call(std::string_view member, std::span<const Value> args, SplitMix64& rng) {
  const BuiltinSpec* spec = nullptr;
  for (auto m : kMathMembers)
    if (m == member) spec = find_builtin(fmt::format("Math.{}", member));
  if (!spec) raise(DiagCode::UnknownMathMember, {std::string(member)});

  const bool count_ok = spec->variadic ? args.size() >= spec->arity() : args.size() == spec->arity();
  if (!count_ok) raise_wrong_count(*spec, args.size());
  std::array<double, 1> first{};
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!args[i].is_number())
      raise(DiagCode::WrongArgType,
            {std::string(spec->params[0].name), "a number", std::string(args[i].type_name())},
            std::nullopt, i);
    if (i == 0) first[0] = args[i].as_number();
  }
  const double x = first[0];
  switch (spec->id) {
    case B::MathCos: return Value(std::cos(x));
    case B::MathSin: return Value(std::sin(x));
    case B::MathFloor: return Value(std::floor(x));
    case B::MathCeil: return Value(std::ceil(x));
    case B::MathRound: return Value(js_round(x));
    case B::MathAbs: return Value(std::fabs(x));
    case B::MathSqrt: return Value(std::sqrt(x));
    case B::MathMin:
    case B::MathMax: {
      double best = x;
      for (const auto& a : args) {
        const double v = a.as_number();
        if (std::isnan(v)) return Value(v);
        best = spec->id == B::MathMin ? std::min(best, v) : std::max(best, v);
      }
      return Value(best);
    }
    case B::MathRandom: return Value(rng.next_unit());
    default: break;
  }
  throw std::logic_error("unhandled Math builtin");
}

Value call_builtin(const BuiltinSpec& spec, std::span<const Value> args, BuiltinContext& ctx) {
  if (spec.is_drawing()) {
    DrawCommand cmd = validate_and_emit(spec, args, ctx.canvas);
    if (ctx.frame.size() >= ctx.max_draw_commands)
      raise(DiagCode::TooManyShapes, {},
            fmt::format("The limit is {} shapes in one frame.", ctx.max_draw_commands));
    ctx.frame.push_back(std::move(cmd));
    return Value();
  }
  if (spec.id == B::RandomColor) return Value(random_color(ctx.rng));
  if (spec.group == G::Math) return math_call(spec.name.substr(5), args, ctx.rng);
  throw std::logic_error("builtin must be dispatched by the interpreter");
}

std::string manifest_json() {
  auto entry = [](const BuiltinSpec& b) {
    nlohmann::ordered_json j;
    j["name"] = b.name;
    auto params = nlohmann::ordered_json::array();
    for (const auto& p : b.params) {
      nlohmann::ordered_json pj;
      pj["name"] = p.name;
      pj["kind"] = kind_json(p.kind);
      if (p.positive) pj["positive"] = true;
      params.push_back(std::move(pj));
    }
    j["params"] = std::move(params);
    j["arity"] = b.arity();
    if (b.variadic) j["variadic"] = true;
    j["signature"] = b.signature();
    j["emits"] = b.emits.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(b.emits);
    j["description"] = b.description;
    return j;
  };
  // Build the arrays first: references into an ordered_json object do not
  // survive later insertions.
  auto functions = nlohmann::ordered_json::array();
  auto extras = nlohmann::ordered_json::array();
  for (const auto& b : kRegistry) (b.in_reference_table ? functions : extras).push_back(entry(b));
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["functions"] = std::move(functions);
  doc["extras"] = std::move(extras);
  return doc.dump(2);
}

}  // namespace brush
