#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace brush {

namespace ast {
struct Node;
}
struct BuiltinSpec;
class Scope;
class Value;

/// Lists have reference semantics: copies of a Value share one Array.
struct Array {
  std::vector<Value> items;
};
using ArrayPtr = std::shared_ptr<Array>;

struct Undefined {
  bool operator==(const Undefined&) const = default;
};

/// Built-in objects reachable by name: Math, canvas and ctx.
enum class Namespace { Math, Canvas, Ctx };

struct FunctionRef {
  /// User function: its declaration and the scope it closes over.
  const ast::Node* decl = nullptr;
  std::shared_ptr<Scope> closure;
  /// Builtin function.
  const BuiltinSpec* builtin = nullptr;
  /// List a bound method (push) acts on.
  ArrayPtr receiver;

  bool is_builtin() const { return builtin != nullptr; }
  std::string name() const;
};

class Value {
 public:
  using Storage = std::variant<Undefined, double, std::string, bool, ArrayPtr, FunctionRef, Namespace>;

  Value() = default;
  Value(double n) : v_(n) {}
  Value(int n) : v_(static_cast<double>(n)) {}
  Value(bool b) : v_(b) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(ArrayPtr a) : v_(std::move(a)) {}
  Value(FunctionRef f) : v_(std::move(f)) {}
  Value(Namespace ns) : v_(ns) {}

  bool is_undefined() const { return std::holds_alternative<Undefined>(v_); }
  bool is_number() const { return std::holds_alternative<double>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_array() const { return std::holds_alternative<ArrayPtr>(v_); }
  bool is_function() const { return std::holds_alternative<FunctionRef>(v_); }
  bool is_namespace() const { return std::holds_alternative<Namespace>(v_); }

  double as_number() const { return std::get<double>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  Array& as_array() const { return *std::get<ArrayPtr>(v_); }
  const ArrayPtr& array_ptr() const { return std::get<ArrayPtr>(v_); }
  const FunctionRef& as_function() const { return std::get<FunctionRef>(v_); }
  Namespace as_namespace() const { return std::get<Namespace>(v_); }

  const Storage& storage() const { return v_; }

  /// Learner-facing kind: "a number", "text", "a list", "nothing", ...
  std::string_view type_name() const;

 private:
  Storage v_;
};

/// Shortest text that reads back as the same double; whole numbers print
/// without a decimal point, like JavaScript.
std::string format_number(double v);

/// Arithmetic, comparison and equality on two values. No implicit type
/// conversion: mixing kinds raises a ScriptError. `&&`/`||` are handled by
/// the evaluator because they short-circuit.
Value binary_op(std::string_view op, const Value& lhs, const Value& rhs);

}  // namespace brush
