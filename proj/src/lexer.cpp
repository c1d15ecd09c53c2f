#include "brush/lexer.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace brush {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "let", "const", "if", "else", "for", "while", "function", "return", "true", "false"};

// Longest first so greedy matching picks "===" over "==".
constexpr std::array<std::string_view, 34> kPunct = {
    "===", "!==", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=",
    "*=",  "/=",  "=>", "(",  ")",  "{",  "}",  "[",  "]",  ",",  ";",  ".",
    "+",   "-",   "*",  "/",  "%",  "=",  "<",  ">",  "!",  "?"};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}
bool digit(char c) { return c >= '0' && c <= '9'; }
bool ident_part(char c) { return ident_start(c) || digit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    LexResult out;
    if (src_.size() > kMaxSourceBytes) {
      out.diagnostics.push_back(make_diagnostic(DiagCode::SourceTooLong, SourceSpan{}));
      out.tokens.push_back(Token{TokenKind::Eof, "", SourceSpan{}});
      return out;
    }
    while (pos_ < src_.size() && out.diagnostics.size() < kMaxDiagnostics) {
      const char c = src_[pos_];
      if (c == '\n') {
        const Mark m = mark();
        advance();
        out.tokens.push_back(Token{TokenKind::Newline, "\n", span_from(m)});
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        block_comment(out);
      } else if (ident_start(c)) {
        identifier(out);
      } else if (digit(c) || (c == '.' && digit(peek(1)))) {
        number(out);
      } else if (c == '"' || c == '\'') {
        string(out);
      } else if (c == '`') {
        backtick(out);
      } else if (!punct(out)) {
        bad_character(out);
      }
    }
    const Mark m = mark();
    out.tokens.push_back(Token{TokenKind::Eof, "", span_from(m)});
    return out;
  }

 private:
  struct Mark {
    std::size_t pos;
    int line;
    int col;
  };

  Mark mark() const { return {pos_, line_, col_}; }

  SourceSpan span_from(const Mark& m) const {
    return SourceSpan{m.line, m.col, line_, col_, m.pos, pos_};
  }

  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // count code points, not UTF-8 continuation bytes
      ++col_;
    }
  }

  void advance_code_point() {
    advance();
    while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) {
      // continuation bytes do not move the column
      ++pos_;
    }
  }

  void push(LexResult& out, TokenKind kind, const Mark& m) {
    out.tokens.push_back(Token{kind, std::string(src_.substr(m.pos, pos_ - m.pos)), span_from(m)});
  }

  void block_comment(LexResult& out) {
    const Mark m = mark();
    advance();
    advance();
    while (pos_ < src_.size()) {
      if (src_[pos_] == '*' && peek(1) == '/') {
        advance();
        advance();
        return;
      }
      advance();
    }
    out.diagnostics.push_back(make_diagnostic(DiagCode::UnterminatedComment, span_from(m)));
  }

  void identifier(LexResult& out) {
    const Mark m = mark();
    while (pos_ < src_.size() && ident_part(src_[pos_])) advance();
    const auto word = src_.substr(m.pos, pos_ - m.pos);
    push(out, is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, m);
  }

  void number(LexResult& out) {
    const Mark m = mark();
    bool well_formed = true;
    while (digit(peek(0))) advance();
    if (peek(0) == '.') {
      advance();
      if (!digit(peek(0))) well_formed = false;
      while (digit(peek(0))) advance();
    }
    if (peek(0) == 'e' || peek(0) == 'E') {
      advance();
      if (peek(0) == '+' || peek(0) == '-') advance();
      if (!digit(peek(0))) well_formed = false;
      while (digit(peek(0))) advance();
    }
    // Anything glued onto a number ("12px", "1.2.3") makes the whole run bad.
    if (ident_part(peek(0)) || peek(0) == '.') {
      well_formed = false;
      while (ident_part(peek(0)) || peek(0) == '.') advance();
    }
    const auto text = src_.substr(m.pos, pos_ - m.pos);
    if (well_formed) {
      double value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        well_formed = false;
    }
    if (!well_formed) {
      out.diagnostics.push_back(
          make_diagnostic(DiagCode::MalformedNumber, span_from(m), {std::string(text)}));
      // Keep a placeholder so the parser does not report a second error here.
      out.tokens.push_back(Token{TokenKind::Number, "0", span_from(m)});
      return;
    }
    push(out, TokenKind::Number, m);
  }

  void string(LexResult& out) {
    const Mark m = mark();
    const char quote = src_[pos_];
    advance();
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      const char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size() && src_[pos_ + 1] != '\n') {
        advance();
        advance_code_point();
        continue;
      }
      if (c == quote) {
        advance();
        push(out, TokenKind::String, m);
        return;
      }
      advance_code_point();
    }
    out.diagnostics.push_back(make_diagnostic(DiagCode::UnterminatedString, span_from(m),
                                              {std::string(1, quote)}));
    push(out, TokenKind::String, m);
  }

  void backtick(LexResult& out) {
    const Mark m = mark();
    advance();
    while (pos_ < src_.size() && src_[pos_] != '`' && src_[pos_] != '\n') advance_code_point();
    if (pos_ < src_.size() && src_[pos_] == '`') advance();
    out.diagnostics.push_back(make_diagnostic(DiagCode::Unsupported, span_from(m),
                                              {"Text in backticks"},
                                              "Use ' or \" quotes around text instead."));
    push(out, TokenKind::String, m);
  }

  bool punct(LexResult& out) {
    for (auto p : kPunct) {
      if (src_.substr(pos_, p.size()) == p) {
        const Mark m = mark();
        for (std::size_t i = 0; i < p.size(); ++i) advance();
        push(out, TokenKind::Punct, m);
        return true;
      }
    }
    return false;
  }

  void bad_character(LexResult& out) {
    const Mark m = mark();
    const auto lead = static_cast<unsigned char>(src_[pos_]);
    advance_code_point();
    const std::string text(src_.substr(m.pos, pos_ - m.pos));
    std::optional<std::string> hint;
    if (text == "‘" || text == "’" || text == "“" || text == "”") {
      hint = "Use plain quotes ' or \" instead of curly ones.";
    } else if (text == "&" || text == "|") {
      hint = "Use && for 'and' or || for 'or'.";
    } else if (lead < 0x20 || lead == 0x7F) {
      hint = "There is an invisible character here. Try retyping this line.";
    }
    const std::string shown = lead < 0x20 || lead == 0x7F ? "?" : text;
    out.diagnostics.push_back(
        make_diagnostic(DiagCode::UnexpectedCharacter, span_from(m), {shown}, std::move(hint)));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

std::string string_value(const Token& token) {
  std::string_view body = token.lexeme;
  if (!body.empty()) body.remove_prefix(1);
  if (!body.empty() && body.back() == token.lexeme.front()) body.remove_suffix(1);
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '\\' || i + 1 == body.size()) {
      out += body[i];
      continue;
    }
    const char e = body[++i];
    switch (e) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case '0': out += '\0'; break;
      default: out += e; break;
    }
  }
  return out;
}

double number_value(const Token& token) {
  double value = 0;
  std::from_chars(token.lexeme.data(), token.lexeme.data() + token.lexeme.size(), value);
  return value;
}

}  // namespace brush
