#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "brush/ast.hpp"
#include "brush/diagnostics.hpp"
#include "brush/lexer.hpp"

namespace brush {

/// Blocks, brackets and prefix operators may nest this deep.
inline constexpr int kMaxNesting = 64;
/// Hard cap on tree depth (long operator chains), keeps every tree walk shallow.
inline constexpr std::size_t kMaxTreeDepth = 512;

struct ParseResult {
  /// Present only when there are no diagnostics.
  ast::NodePtr program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program != nullptr; }
};

/// Parse a token list ending in Eof into a Program node.
ParseResult parse(std::span<const Token> tokens);

/// Tokenize and parse. Lexer and parser diagnostics are merged in source
/// order and capped at kMaxDiagnostics.
ParseResult parse_program(std::string_view source);

/// Parse source holding exactly one expression (used by tooling and tests).
ParseResult parse_expression(std::string_view source);

}  // namespace brush
