#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "brush/diagnostics.hpp"
#include "brush/source_span.hpp"

namespace brush {

enum class TokenKind { Identifier, Number, String, Keyword, Punct, Newline, Eof };

struct Token {
  TokenKind kind = TokenKind::Eof;
  /// Exact source text, quotes included for strings.
  std::string lexeme;
  SourceSpan span;

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
  bool is_punct(std::string_view text) const { return is(TokenKind::Punct, text); }
  bool is_keyword(std::string_view text) const { return is(TokenKind::Keyword, text); }
};

/// Source texts longer than this are rejected before lexing.
inline constexpr std::size_t kMaxSourceBytes = 64 * 1024;

bool is_keyword(std::string_view word);

struct LexResult {
  /// Always ends with an Eof token, even when diagnostics were produced.
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

LexResult tokenize(std::string_view source);

/// Decoded contents of a String token (quotes stripped, escapes applied).
std::string string_value(const Token& token);

/// Numeric value of a Number token.
double number_value(const Token& token);

}  // namespace brush
