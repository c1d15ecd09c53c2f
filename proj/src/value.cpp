#include "brush/value.hpp"

#include <charconv>
#include <cmath>

#include "brush/ast.hpp"
#include "brush/builtins.hpp"
#include "brush/diagnostics.hpp"
#include "brush/environment.hpp"

namespace brush {

namespace {

constexpr std::size_t kMaxStringLength = 1'000'000;

bool is_comparison(std::string_view op) {
  return op == "<" || op == "<=" || op == ">" || op == ">=";
}
bool is_equality(std::string_view op) {
  return op == "==" || op == "!=" || op == "===" || op == "!==";
}

}  // namespace

std::string FunctionRef::name() const {
  if (decl) return decl->name;
  if (builtin) return std::string(builtin->name);
  return "function";
}

std::string_view Value::type_name() const {
  switch (v_.index()) {
    case 0: return "nothing";
    case 1: return "a number";
    case 2: return "text";
    case 3: return "true/false";
    case 4: return "a list";
    case 5: return "a function";
    default: return "a toolbox";
  }
}

std::string format_number(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  if (v == 0) return "0";
  char buf[64];
  if (std::trunc(v) == v && std::fabs(v) < 1e21) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 0);
    return std::string(buf, ptr);
  }
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Value binary_op(std::string_view op, const Value& lhs, const Value& rhs) {
  const std::string op_text(op);
  if (is_equality(op)) {
    const bool negate = op == "!=" || op == "!==";
    bool equal = false;
    if (lhs.is_number() && rhs.is_number()) {
      equal = lhs.as_number() == rhs.as_number();
    } else if (lhs.is_string() && rhs.is_string()) {
      equal = lhs.as_string() == rhs.as_string();
    } else if (lhs.is_bool() && rhs.is_bool()) {
      equal = lhs.as_bool() == rhs.as_bool();
    } else {
      raise(DiagCode::CannotCompare,
            {std::string(lhs.type_name()), std::string(rhs.type_name()), op_text});
    }
    return Value(equal != negate);
  }

  if (op == "+" && lhs.is_string() && rhs.is_string()) {
    if (lhs.as_string().size() + rhs.as_string().size() > kMaxStringLength)
      raise(DiagCode::TextTooLong);
    return Value(lhs.as_string() + rhs.as_string());
  }

  if (!lhs.is_number() || !rhs.is_number()) {
    if (is_comparison(op)) {
      raise(DiagCode::CannotCompare,
            {std::string(lhs.type_name()), std::string(rhs.type_name()), op_text},
            "Only numbers can be compared with " + op_text + ".");
    }
    std::optional<std::string> hint;
    if (op == "+" && (lhs.is_string() || rhs.is_string()))
      hint = "'+' can add two numbers or join two pieces of text, but not mix them.";
    raise(DiagCode::BadOperands,
          {op_text, std::string(lhs.type_name()), std::string(rhs.type_name())}, hint);
  }

  const double a = lhs.as_number();
  const double b = rhs.as_number();
  if (op == "+") return Value(a + b);
  if (op == "-") return Value(a - b);
  if (op == "*") return Value(a * b);
  if (op == "/") return Value(a / b);
  if (op == "%") return Value(std::fmod(a, b));
  if (op == "<") return Value(a < b);
  if (op == "<=") return Value(a <= b);
  if (op == ">") return Value(a > b);
  if (op == ">=") return Value(a >= b);
  throw std::logic_error("unknown binary operator " + op_text);
}

// ---- Scope -------------------------------------------------------------

void Scope::declare(const std::string& name, Value value, bool is_mutable, bool is_builtin) {
  auto [it, inserted] = vars_.try_emplace(name, Binding{std::move(value), is_mutable, is_builtin});
  if (!inserted) {
    if (it->second.is_builtin) raise(DiagCode::BuiltinReassign, {name});
    raise(DiagCode::AlreadyDeclared, {name, name});
  }
}

Binding* Scope::find(const std::string& name) {
  for (Scope* s = this; s; s = s->parent_.get()) {
    auto it = s->vars_.find(name);
    if (it != s->vars_.end()) return &it->second;
  }
  return nullptr;
}

void Scope::assign(const std::string& name, Value value) {
  Binding* b = find(name);
  if (!b) raise(DiagCode::UnknownName, {name});
  if (b->is_builtin) raise(DiagCode::BuiltinReassign, {name});
  if (!b->is_mutable) raise(DiagCode::ConstReassign, {name});
  b->value = std::move(value);
}

std::vector<std::string> Scope::visible_names() const {
  std::vector<std::string> out;
  for (const Scope* s = this; s; s = s->parent_.get())
    for (const auto& [name, binding] : s->vars_) out.push_back(name);
  return out;
}

}  // namespace brush
