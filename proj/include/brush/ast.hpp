#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "brush/source_span.hpp"

namespace brush::ast {

enum class NodeKind {
  // statements
  Program,
  Block,
  VarDecl,       // name, is_const, children: [init]?
  Assign,        // op in `op`, children: [target, value]
  Update,        // op "++" / "--", children: [target]
  ExprStmt,      // children: [expr]
  For,           // children: [init, cond, update, body]; missing parts are Empty
  While,         // children: [cond, body]
  If,            // children: [cond, then, else?]
  FunctionDecl,  // name, children: [Identifier params..., Block body]
  Return,        // children: [value]?
  Empty,
  // expressions
  NumberLit,
  StringLit,
  BoolLit,
  ArrayLit,
  Identifier,
  Index,   // children: [object, index]
  Member,  // name = property, children: [object]
  Call,    // children: [callee, args...]
  Unary,   // op, children: [operand]
  Binary,  // op, children: [lhs, rhs]
  Logical  // op "&&" / "||", children: [lhs, rhs]
};

std::string_view kind_name(NodeKind kind);

using Literal = std::variant<double, std::string, bool>;

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  NodeKind kind = NodeKind::Empty;
  SourceSpan span;
  /// Identifier / function / property name.
  std::string name;
  /// Operator text for Assign, Update, Unary, Binary and Logical nodes.
  std::string op;
  bool is_const = false;
  /// Quote character a string literal was written with.
  char quote = '\'';
  std::optional<Literal> literal;
  std::vector<NodePtr> children;

  Node() = default;
  Node(NodeKind k, SourceSpan s) : kind(k), span(s) {}

  const Node& child(std::size_t i) const { return *children.at(i); }
  bool is_expression() const { return kind >= NodeKind::NumberLit; }

  /// FunctionDecl helpers.
  std::size_t param_count() const { return children.empty() ? 0 : children.size() - 1; }
  const Node& body() const { return *children.back(); }
};

/// Equality of shape and payload, ignoring spans.
bool structurally_equal(const Node& a, const Node& b);

/// Canonical source text. Nested operators are fully parenthesised, so
/// re-parsing the output yields a structurally equal tree.
std::string to_source(const Node& node);

/// Largest depth of the tree rooted at `node` (a leaf has depth 1).
std::size_t depth(const Node& node);

}  // namespace brush::ast
