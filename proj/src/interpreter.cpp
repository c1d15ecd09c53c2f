#include "brush/interpreter.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "brush/builtins.hpp"
#include "brush/color.hpp"

namespace brush {

using ast::Node;
using ast::NodeKind;

namespace {

struct DepthGuard {
  int& depth;
  explicit DepthGuard(int& d) : depth(d) {
    if (++depth > kMaxEvalDepth) {
      --depth;
      raise(DiagCode::CallDepth);
    }
  }
  ~DepthGuard() { --depth; }
};

template <typename T>
struct Restore {
  T& slot;
  T saved;
  Restore(T& s, T next) : slot(s), saved(std::move(s)) { slot = std::move(next); }
  ~Restore() { slot = std::move(saved); }
};

std::optional<std::string> suggest(const std::string& name, std::vector<std::string> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t best = 3;
  const std::string* pick = nullptr;
  for (const auto& c : candidates) {
    const std::size_t d = edit_distance(name, c);
    if (d < best && d * 2 <= std::max(name.size(), c.size())) {
      best = d;
      pick = &c;
    }
  }
  if (!pick) return std::nullopt;
  return fmt::format("Did you mean '{}'?", *pick);
}

std::string capitalize(std::string_view s) {
  std::string out(s);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

template <typename T>
void compact(std::vector<std::weak_ptr<T>>& list, std::size_t& hint) {
  if (list.size() < 2 * hint) return;
  std::erase_if(list, [](const std::weak_ptr<T>& w) { return w.expired(); });
  hint = std::max<std::size_t>(64, list.size());
}

}  // namespace

bool RunResult::ok() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(),
                      [](const Diagnostic& d) { return d.is_error(); });
}

Interpreter::Interpreter(const Node& program, RunConfig config)
    : program_(program), config_(std::move(config)), rng_(config_.seed) {
  global_ = std::make_shared<Scope>();
  register_builtins(*global_);
  env_ = global_;
}

Interpreter::~Interpreter() { teardown(); }

void Interpreter::teardown() {
  pending_.reset();
  return_value_ = Value();
  for (auto& w : captured_)
    if (auto s = w.lock()) s->clear();
  for (auto& w : arrays_)
    if (auto a = w.lock()) a->items.clear();
  if (global_) global_->clear();
  env_.reset();
  global_.reset();
}

void Interpreter::charge(std::uint64_t steps) {
  frame_steps_ += steps;
  total_steps_ += steps;
  if (frame_steps_ > config_.limits.max_steps_per_frame)
    raise(DiagCode::StepBudget, {},
          fmt::format("Each frame can take {} steps. Make sure every loop has a way to stop.",
                      config_.limits.max_steps_per_frame));
}

DisplayList& Interpreter::current_frame() {
  if (frames_.empty()) frames_.emplace_back();
  return frames_.back();
}

ArrayPtr Interpreter::new_array() {
  auto a = std::shared_ptr<Array>(new Array);
  compact(arrays_, arrays_live_hint_);
  arrays_.push_back(a);
  return a;
}

std::optional<Value> Interpreter::global(const std::string& name) const {
  if (!global_) return std::nullopt;
  if (Binding* b = global_->find(name)) return b->value;
  return std::nullopt;
}

Value Interpreter::call(const Value& callee, std::vector<Value> args) {
  if (!callee.is_function()) raise(DiagCode::NotCallable, {std::string(callee.type_name())});
  current_frame();
  frame_steps_ = 0;
  return call_function(callee.as_function(), args, SourceSpan{});
}

RunResult Interpreter::run() {
  RunResult result;
  result.rng_seed = config_.seed;
  const int max_frames = std::max(1, config_.max_frames);

  auto record = [&](ScriptError& e, const SourceSpan& fallback) {
    if (!e.has_span()) e.set_span(fallback);
    diagnostics_.push_back(e.diagnostic());
  };

  frames_.emplace_back();
  frame_steps_ = 0;
  bool failed = false;
  try {
    exec(program_);
  } catch (ScriptError& e) {
    record(e, program_.span);
    failed = true;
  }

  while (!failed && pending_ && static_cast<int>(frames_.size()) < max_frames) {
    Pending next = std::move(*pending_);
    pending_.reset();
    frames_.emplace_back();
    frame_steps_ = 0;
    try {
      std::vector<Value> none;
      call_function(next.callback, none, next.site);
    } catch (ScriptError& e) {
      record(e, next.site);
      failed = true;
    }
  }

  result.frames = std::move(frames_);
  frames_.clear();
  result.diagnostics = std::move(diagnostics_);
  diagnostics_.clear();
  result.steps_used = total_steps_;
  result.rng_draws = rng_.draws();
  return result;
}

// ---- statements ------------------------------------------------------------

Interpreter::Flow Interpreter::exec(const Node& node) {
  DepthGuard guard(eval_depth_);
  try {
    charge(1);
    return exec_inner(node);
  } catch (ScriptError& e) {
    if (!e.has_span()) e.set_span(node.span);
    throw;
  }
}

void Interpreter::hoist(const Node& block) {
  for (const auto& child : block.children) {
    if (child->kind != NodeKind::FunctionDecl) continue;
    try {
      env_->declare(child->name, Value(FunctionRef{child.get(), env_, nullptr, nullptr}), true);
    } catch (ScriptError& e) {
      if (!e.has_span()) e.set_span(child->span);
      throw;
    }
    compact(captured_, captured_live_hint_);
    captured_.push_back(env_);
  }
}

Interpreter::Flow Interpreter::exec_block(const Node& block, std::shared_ptr<Scope> scope) {
  Restore<std::shared_ptr<Scope>> swap(env_, std::move(scope));
  hoist(block);
  for (const auto& child : block.children)
    if (exec(*child) == Flow::Return) return Flow::Return;
  return Flow::Normal;
}

bool Interpreter::condition(const Node& node) {
  Value v = eval(node);
  if (!v.is_bool()) {
    ScriptError err(make_diagnostic(DiagCode::ConditionNotBoolean, node.span,
                                    {std::string(v.type_name())}));
    err.set_span(node.span);
    throw err;
  }
  return v.as_bool();
}

Interpreter::Flow Interpreter::exec_inner(const Node& node) {
  switch (node.kind) {
    case NodeKind::Program: {
      hoist(node);
      for (const auto& child : node.children)
        if (exec(*child) == Flow::Return) return Flow::Return;
      return Flow::Normal;
    }
    case NodeKind::Block:
      return exec_block(node, std::make_shared<Scope>(env_));
    case NodeKind::VarDecl: {
      Value v = node.children.empty() ? Value() : eval(node.child(0));
      env_->declare(node.name, std::move(v), !node.is_const);
      return Flow::Normal;
    }
    case NodeKind::Assign: {
      const Node& target = node.child(0);
      Value rhs = eval(node.child(1));
      if (node.op != "=") {
        Value current = eval(target);
        rhs = binary_op(std::string_view(node.op).substr(0, node.op.size() - 1), current, rhs);
      }
      assign_to(target, std::move(rhs));
      return Flow::Normal;
    }
    case NodeKind::Update: {
      const Node& target = node.child(0);
      Value current = eval(target);
      if (!current.is_number()) raise(DiagCode::BadOperand, {node.op, std::string(current.type_name())});
      const double delta = node.op == "++" ? 1 : -1;
      assign_to(target, Value(current.as_number() + delta));
      return Flow::Normal;
    }
    case NodeKind::ExprStmt:
      eval(node.child(0));
      return Flow::Normal;
    case NodeKind::For: {
      Restore<std::shared_ptr<Scope>> swap(env_, std::make_shared<Scope>(env_));
      const Node& init = node.child(0);
      const Node& cond = node.child(1);
      const Node& update = node.child(2);
      const Node& body = node.child(3);
      if (init.kind != NodeKind::Empty) exec(init);
      while (true) {
        if (cond.kind != NodeKind::Empty && !condition(cond)) break;
        if (exec(body) == Flow::Return) return Flow::Return;
        if (update.kind != NodeKind::Empty) exec(update);
      }
      return Flow::Normal;
    }
    case NodeKind::While:
      while (condition(node.child(0)))
        if (exec(node.child(1)) == Flow::Return) return Flow::Return;
      return Flow::Normal;
    case NodeKind::If:
      if (condition(node.child(0))) return exec(node.child(1));
      if (node.children.size() > 2) return exec(node.child(2));
      return Flow::Normal;
    case NodeKind::FunctionDecl:
      // Bound when the enclosing block started.
      return Flow::Normal;
    case NodeKind::Return:
      return_value_ = node.children.empty() ? Value() : eval(node.child(0));
      return Flow::Return;
    case NodeKind::Empty:
      return Flow::Normal;
    default:
      eval(node);
      return Flow::Normal;
  }
}

void Interpreter::assign_to(const Node& target, Value value) {
  if (target.kind == NodeKind::Identifier) {
    try {
      env_->assign(target.name, std::move(value));
    } catch (ScriptError& e) {
      if (e.diagnostic().code == catalog_entry(DiagCode::UnknownName).code) {
        if (auto hint = suggest(target.name, env_->visible_names())) e.diagnostic().hint = hint;
      }
      if (!e.has_span()) e.set_span(target.span);
      throw;
    }
    return;
  }
  // Index
  Value object = eval(target.child(0));
  Value index = eval(target.child(1));
  std::size_t slot = 0;
  Array& list = list_at(object, index, &slot, true);
  if (slot == list.items.size()) {
    if (list.items.size() >= config_.limits.max_array_length) raise(DiagCode::ListTooLong);
    list.items.push_back(std::move(value));
  } else {
    list.items[slot] = std::move(value);
  }
}

Array& Interpreter::list_at(const Value& object, const Value& index, std::size_t* slot,
                            bool for_write) {
  if (!object.is_array()) raise(DiagCode::NotAList, {std::string(object.type_name())});
  if (!index.is_number())
    raise(DiagCode::WrongArgType, {"A spot in a list", "a number", std::string(index.type_name())});
  const double i = index.as_number();
  if (!std::isfinite(i) || i != std::floor(i)) raise(DiagCode::IndexNotWhole, {format_number(i)});
  Array& list = object.as_array();
  const double limit = static_cast<double>(list.items.size()) + (for_write ? 1 : 0);
  if (i < 0 || i >= limit)
    raise(DiagCode::IndexOutOfRange, {format_number(i), std::to_string(list.items.size())});
  *slot = static_cast<std::size_t>(i);
  return list;
}

// ---- expressions -----------------------------------------------------------

Value Interpreter::eval(const Node& node) {
  DepthGuard guard(eval_depth_);
  try {
    charge(1);
    return eval_inner(node);
  } catch (ScriptError& e) {
    if (!e.has_span()) e.set_span(node.span);
    throw;
  }
}

Value Interpreter::lookup(const Node& ident) {
  if (Binding* b = env_->find(ident.name)) return b->value;
  raise(DiagCode::UnknownName, {ident.name}, suggest(ident.name, env_->visible_names()));
}

Value Interpreter::eval_inner(const Node& node) {
  switch (node.kind) {
    case NodeKind::NumberLit: return Value(std::get<double>(*node.literal));
    case NodeKind::StringLit: return Value(std::get<std::string>(*node.literal));
    case NodeKind::BoolLit: return Value(std::get<bool>(*node.literal));
    case NodeKind::ArrayLit: {
      ArrayPtr list = new_array();
      list->items.reserve(node.children.size());
      for (const auto& child : node.children) {
        if (list->items.size() >= config_.limits.max_array_length) raise(DiagCode::ListTooLong);
        list->items.push_back(eval(*child));
      }
      return Value(std::move(list));
    }
    case NodeKind::Identifier: return lookup(node);
    case NodeKind::Index: {
      Value object = eval(node.child(0));
      Value index = eval(node.child(1));
      std::size_t slot = 0;
      Array& list = list_at(object, index, &slot, false);
      return list.items[slot];
    }
    case NodeKind::Member: return eval_member(node);
    case NodeKind::Call: return eval_call(node);
    case NodeKind::Unary: {
      Value v = eval(node.child(0));
      if (node.op == "-") {
        if (!v.is_number()) raise(DiagCode::BadOperand, {"-", std::string(v.type_name())});
        return Value(-v.as_number());
      }
      if (node.op == "+") {
        if (!v.is_number()) raise(DiagCode::BadOperand, {"+", std::string(v.type_name())});
        return v;
      }
      if (!v.is_bool())
        raise(DiagCode::BadOperand, {node.op, std::string(v.type_name())},
              "'!' flips true and false.");
      return Value(!v.as_bool());
    }
    case NodeKind::Binary: {
      Value lhs = eval(node.child(0));
      Value rhs = eval(node.child(1));
      return binary_op(node.op, lhs, rhs);
    }
    case NodeKind::Logical: {
      const bool is_and = node.op == "&&";
      auto check = [&](const Value& v) {
        if (!v.is_bool())
          raise(DiagCode::BadOperand, {node.op, std::string(v.type_name())},
                fmt::format("Both sides of '{}' must be true or false.", node.op));
        return v.as_bool();
      };
      Value lhs = eval(node.child(0));
      const bool left = check(lhs);
      if (is_and ? !left : left) return Value(left);
      Value rhs = eval(node.child(1));
      return Value(check(rhs));
    }
    default: break;
  }
  throw std::logic_error(fmt::format("cannot evaluate {}", ast::kind_name(node.kind)));
}

Value Interpreter::eval_member(const Node& node) {
  Value object = eval(node.child(0));
  const std::string& prop = node.name;
  if (object.is_namespace()) {
    switch (object.as_namespace()) {
      case Namespace::Math: return math_member(prop);
      case Namespace::Canvas:
        if (prop == "width") return Value(config_.canvas.width);
        if (prop == "height") return Value(config_.canvas.height);
        raise(DiagCode::UnknownProperty, {"canvas", prop}, "canvas has width and height.");
      case Namespace::Ctx:
        if (prop == "clearRect")
          return Value(FunctionRef{nullptr, nullptr, &builtin(BuiltinId::CtxClearRect), nullptr});
        raise(DiagCode::UnknownProperty, {"ctx", prop},
              "Use the drawing functions, like drawCircle, instead.");
    }
  }
  if (object.is_array()) {
    if (prop == "length") return Value(static_cast<double>(object.as_array().items.size()));
    if (prop == "push")
      return Value(FunctionRef{nullptr, nullptr, &builtin(BuiltinId::ListPush), object.array_ptr()});
    raise(DiagCode::UnknownProperty, {"A list", prop}, "Lists have length and push.");
  }
  if (object.is_string() && prop == "length")
    return Value(static_cast<double>(object.as_string().size()));
  raise(DiagCode::UnknownProperty, {capitalize(object.type_name()), prop});
}

Value Interpreter::eval_call(const Node& node) {
  Value callee = eval(node.child(0));
  std::vector<Value> args;
  args.reserve(node.children.size() - 1);
  for (std::size_t i = 1; i < node.children.size(); ++i) args.push_back(eval(node.child(i)));
  if (!callee.is_function()) {
    ScriptError err(make_diagnostic(DiagCode::NotCallable, node.child(0).span,
                                    {std::string(callee.type_name())}));
    err.set_span(node.child(0).span);
    throw err;
  }
  try {
    return call_function(callee.as_function(), args, node.span);
  } catch (ScriptError& e) {
    if (!e.has_span() && e.argument_index() && *e.argument_index() + 1 < node.children.size())
      e.set_span(node.child(*e.argument_index() + 1).span);
    throw;
  }
}

Value Interpreter::call_function(const FunctionRef& fn, std::vector<Value>& args,
                                 const SourceSpan& site) {
  if (fn.is_builtin()) return call_builtin_fn(fn, args, site);

  const Node& decl = *fn.decl;
  const std::size_t count = decl.param_count();
  if (args.size() != count) {
    std::string params;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) params += ", ";
      params += decl.child(i).name;
    }
    raise(DiagCode::WrongArgCount, arity_parts(decl.name, count, false, params),
          fmt::format("You gave it {}.", args.size()));
  }
  if (call_depth_ >= config_.limits.max_call_depth) raise(DiagCode::CallDepth);

  auto scope = std::make_shared<Scope>(fn.closure);
  for (std::size_t i = 0; i < count; ++i) scope->declare(decl.child(i).name, std::move(args[i]), true);

  Restore<int> depth(call_depth_, call_depth_ + 1);
  return_value_ = Value();
  if (exec_block(decl.body(), std::move(scope)) == Flow::Return) {
    Value out = std::move(return_value_);
    return_value_ = Value();
    return out;
  }
  return Value();
}

Value Interpreter::call_builtin_fn(const FunctionRef& fn, std::vector<Value>& args,
                                   const SourceSpan& site) {
  const BuiltinSpec& spec = *fn.builtin;
  const bool count_ok = spec.variadic ? args.size() >= spec.arity() : args.size() == spec.arity();
  if (!count_ok) raise_wrong_count(spec, args.size());
  charge(spec.is_drawing() ? kDrawStepCost : kBuiltinStepCost);

  switch (spec.id) {
    case BuiltinId::RequestAnimationFrame: {
      if (!args[0].is_function() || args[0].as_function().is_builtin())
        raise(DiagCode::WrongArgType,
              {"callback", "the name of one of your functions", std::string(args[0].type_name())},
              "Write the name without ( ), like requestAnimationFrame(animate).", 0);
      if (pending_ && diagnostics_.size() + 1 < kMaxDiagnostics)
        diagnostics_.push_back(make_diagnostic(DiagCode::AnimationReplaced, site));
      pending_ = Pending{args[0].as_function(), site,
                         static_cast<int>(frames_.empty() ? 0 : frames_.size() - 1)};
      return Value();
    }
    case BuiltinId::ListPush: {
      Array& list = *fn.receiver;
      if (list.items.size() >= config_.limits.max_array_length) raise(DiagCode::ListTooLong);
      list.items.push_back(std::move(args[0]));
      return Value(static_cast<double>(list.items.size()));
    }
    default: {
      BuiltinContext ctx{current_frame(), rng_, config_.canvas,
                         config_.limits.max_draw_commands_per_frame};
      return call_builtin(spec, args, ctx);
    }
  }
}

RunResult evaluate(const Node& program, const ExecLimits& limits, std::uint64_t seed,
                   const CanvasConfig& canvas) {
  RunConfig config;
  config.limits = limits;
  config.seed = seed;
  config.canvas = canvas;
  config.max_frames = 1;
  return run_frames(program, config);
}

RunResult run_frames(const Node& program, const RunConfig& config) {
  Interpreter interp(program, config);
  return interp.run();
}

}  // namespace brush
