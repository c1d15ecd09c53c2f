#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "brush/value.hpp"

namespace brush {

struct Binding {
  Value value;
  bool is_mutable = true;
  bool is_builtin = false;
};

/// One lexical scope. Lookup walks outward through parents.
class Scope {
 public:
  explicit Scope(std::shared_ptr<Scope> parent = nullptr) : parent_(std::move(parent)) {}

  /// Throws AlreadyDeclared / BuiltinReassign when the name exists here.
  void declare(const std::string& name, Value value, bool is_mutable, bool is_builtin = false);

  /// Innermost binding for `name`, or nullptr.
  Binding* find(const std::string& name);

  /// Throws UnknownName, ConstReassign or BuiltinReassign.
  void assign(const std::string& name, Value value);

  const std::shared_ptr<Scope>& parent() const { return parent_; }

  /// Every name visible from this scope, innermost first.
  std::vector<std::string> visible_names() const;

  /// Drop all bindings; breaks reference cycles through closures.
  void clear() { vars_.clear(); }

 private:
  std::shared_ptr<Scope> parent_;
  std::unordered_map<std::string, Binding> vars_;
};

}  // namespace brush
