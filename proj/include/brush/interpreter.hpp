#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "brush/ast.hpp"
#include "brush/canvas.hpp"
#include "brush/diagnostics.hpp"
#include "brush/draw_command.hpp"
#include "brush/environment.hpp"
#include "brush/rng.hpp"
#include "brush/value.hpp"

namespace brush {

struct ExecLimits {
  std::uint64_t max_steps_per_frame = 2'000'000;
  std::size_t max_draw_commands_per_frame = 100'000;
  int max_call_depth = 256;
  std::size_t max_array_length = 1'000'000;
};

/// Step costs: every evaluated node costs one, builtin calls cost extra.
inline constexpr std::uint64_t kBuiltinStepCost = 10;
inline constexpr std::uint64_t kDrawStepCost = 25;
/// Nested evaluation (statements and expressions, across calls) is capped so
/// the native stack stays bounded no matter how calls and nesting combine.
inline constexpr int kMaxEvalDepth = 4096;

struct RunConfig {
  ExecLimits limits;
  std::uint64_t seed = 0;
  CanvasConfig canvas;
  /// Frame 0 is the top-level program; later frames run the pending
  /// requestAnimationFrame callback.
  int max_frames = 1;
};

struct RunResult {
  /// One display list per executed frame.
  std::vector<DisplayList> frames;
  /// Warnings plus at most one runtime error, in the order they happened.
  std::vector<Diagnostic> diagnostics;
  std::uint64_t steps_used = 0;
  std::uint64_t rng_seed = 0;
  std::uint64_t rng_draws = 0;

  bool ok() const;
};

/// Tree-walking evaluator for one parsed program. The tree must outlive the
/// interpreter.
class Interpreter {
 public:
  Interpreter(const ast::Node& program, RunConfig config);
  ~Interpreter();
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  /// Execute frame 0 and then animation frames until no callback is pending,
  /// max_frames is reached or an error stops the program.
  RunResult run();

  /// Global binding after run(), for tests and tooling.
  std::optional<Value> global(const std::string& name) const;

  /// Call a function value with a fresh step budget; throws ScriptError.
  Value call(const Value& callee, std::vector<Value> args);

 private:
  enum class Flow { Normal, Return };

  Flow exec(const ast::Node& node);
  Flow exec_inner(const ast::Node& node);
  Flow exec_block(const ast::Node& block, std::shared_ptr<Scope> scope);
  void hoist(const ast::Node& block);
  Value eval(const ast::Node& node);
  Value eval_inner(const ast::Node& node);
  Value eval_call(const ast::Node& node);
  Value eval_member(const ast::Node& node);
  Value lookup(const ast::Node& ident);
  bool condition(const ast::Node& node);
  void assign_to(const ast::Node& target, Value value);
  Value call_function(const FunctionRef& fn, std::vector<Value>& args, const SourceSpan& site);
  Value call_builtin_fn(const FunctionRef& fn, std::vector<Value>& args, const SourceSpan& site);
  ArrayPtr new_array();
  Array& list_at(const Value& object, const Value& index, std::size_t* slot, bool for_write);
  void charge(std::uint64_t steps);
  DisplayList& current_frame();
  void teardown();

  const ast::Node& program_;
  RunConfig config_;
  SplitMix64 rng_;
  std::shared_ptr<Scope> global_;
  std::shared_ptr<Scope> env_;
  std::vector<DisplayList> frames_;
  std::vector<Diagnostic> diagnostics_;
  std::uint64_t frame_steps_ = 0;
  std::uint64_t total_steps_ = 0;
  int call_depth_ = 0;
  int eval_depth_ = 0;
  Value return_value_;

  struct Pending {
    FunctionRef callback;
    SourceSpan site;
    int registered_in_frame = 0;
  };
  std::optional<Pending> pending_;

  /// Scopes captured by closures and every list created, so cycles can be
  /// broken when the run ends.
  std::vector<std::weak_ptr<Scope>> captured_;
  std::vector<std::weak_ptr<Array>> arrays_;
  std::size_t arrays_live_hint_ = 64;
  std::size_t captured_live_hint_ = 64;
};

/// Run only the top-level program (one frame).
RunResult evaluate(const ast::Node& program, const ExecLimits& limits = {},
                   std::uint64_t seed = 0, const CanvasConfig& canvas = {});

/// Run up to config.max_frames frames.
RunResult run_frames(const ast::Node& program, const RunConfig& config);

}  // namespace brush
