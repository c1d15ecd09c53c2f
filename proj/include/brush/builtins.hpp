#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brush/canvas.hpp"
#include "brush/draw_command.hpp"
#include "brush/rng.hpp"
#include "brush/value.hpp"

namespace brush {

class Scope;

enum class BuiltinId {
  DrawCircle,
  DrawRect,
  DrawSquare,
  DrawStar,
  DrawHexagon,
  DrawPentagon,
  DrawHeptagon,
  DrawOctagon,
  DrawTriangle,
  DrawSemicircle,
  DrawOval,
  DrawLine,
  DrawCurve,
  DrawText,
  RandomColor,
  ClearCanvas,
  CtxClearRect,
  RequestAnimationFrame,
  MathCos,
  MathSin,
  MathFloor,
  MathCeil,
  MathRound,
  MathAbs,
  MathSqrt,
  MathMin,
  MathMax,
  MathRandom,
  ListPush,
};

enum class ParamKind { Number, Color, Text, Function, Any };

struct ParamSpec {
  std::string_view name;
  ParamKind kind = ParamKind::Number;
  /// Sizes and radii must be > 0.
  bool positive = false;
};

enum class BuiltinGroup { Drawing, Color, Canvas, Animation, Math, List };

struct BuiltinSpec {
  BuiltinId id;
  /// Name as written by learners, e.g. "drawCircle" or "Math.floor".
  std::string_view name;
  BuiltinGroup group;
  std::span<const ParamSpec> params;
  /// Math.min / Math.max take one or more values.
  bool variadic = false;
  /// Draw-list kind the call emits, empty for scalar builtins.
  std::string_view emits;
  std::string_view description;
  /// Row of the drawing-function reference table.
  bool in_reference_table = false;

  std::size_t arity() const { return params.size(); }
  bool is_drawing() const { return !emits.empty(); }
  /// "x, y, radius, color"
  std::string param_list() const;
  /// "drawCircle(x, y, radius, color)"
  std::string signature() const;
};

std::span<const BuiltinSpec> builtin_registry();
const BuiltinSpec& builtin(BuiltinId id);
/// Lookup by learner-visible name ("drawStar", "Math.cos", "ctx.clearRect").
const BuiltinSpec* find_builtin(std::string_view name);

/// Bind every global builtin name as a constant in `global`, together with
/// the Math, canvas and ctx objects. Calls later receive their draw sink,
/// PRNG and canvas through BuiltinContext.
void register_builtins(Scope& global);

/// Placeholder values for the wrong-argument-count message:
/// {name, "4 values", ": x, y, radius, color"}.
std::vector<std::string> arity_parts(std::string_view name, std::size_t count, bool variadic,
                                     const std::string& params);

/// Message text for a call with the wrong number of values, e.g.
/// "drawCircle needs 4 values: x, y, radius, color".
std::string arity_message(const BuiltinSpec& spec);

[[noreturn]] void raise_wrong_count(const BuiltinSpec& spec, std::size_t given);

/// Validate the arguments of a drawing builtin (count already checked) and
/// build its command. Throws ScriptError naming the offending parameter.
DrawCommand validate_and_emit(const BuiltinSpec& spec, std::span<const Value> args,
                              const CanvasConfig& canvas = {});

/// `#RRGGBB` from the top 24 bits of one PRNG draw.
std::string random_color(SplitMix64& rng);

/// Call a Math function by member name ("floor", "random", ...).
/// Throws UnknownMathMember for anything outside the supported set.
Value math_call(std::string_view member, std::span<const Value> args, SplitMix64& rng);

/// Read a Math member: PI is a number, the rest are function values.
Value math_member(std::string_view member);

struct BuiltinContext {
  DisplayList& frame;
  SplitMix64& rng;
  const CanvasConfig& canvas;
  std::size_t max_draw_commands = 100'000;
};

/// Run a builtin that only needs the draw sink, PRNG and canvas. Animation
/// and list builtins are handled by the interpreter.
Value call_builtin(const BuiltinSpec& spec, std::span<const Value> args, BuiltinContext& ctx);

/// The reference-table manifest (names, parameters, descriptions) as JSON.
std::string manifest_json();

}  // namespace brush
