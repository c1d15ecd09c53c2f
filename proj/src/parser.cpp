#include "brush/parser.hpp"

#include <algorithm>
#include <array>

namespace brush {

namespace {

using ast::Node;
using ast::NodeKind;
using ast::NodePtr;

constexpr std::array<std::string_view, 5> kAssignOps = {"=", "+=", "-=", "*=", "/="};
constexpr int kMaxChain = 256;

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : toks_(tokens) {
    if (!toks_.empty()) prev_ = toks_.front().span;
  }

  ParseResult program() {
    auto root = std::make_unique<Node>(NodeKind::Program, SourceSpan{});
    try {
      while (true) {
        skip_separators();
        if (raw().kind == TokenKind::Eof) break;
        if (raw().is_punct("}")) {
          record(make_diagnostic(DiagCode::UnexpectedWord, raw().span, {"}"},
                                 "This '}' has no '{' to match."));
          ++pos_;
          continue;
        }
        const std::size_t before = diags_.size();
        NodePtr stmt = statement_with_recovery();
        if (stmt && diags_.size() == before && ast::depth(*stmt) > kMaxTreeDepth)
          record(make_diagnostic(DiagCode::NestingTooDeep, stmt->span));
        if (stmt) root->children.push_back(std::move(stmt));
      }
    } catch (const Stop&) {
    }
    const Token& last = toks_.back();
    root->span = SourceSpan{1, 1, last.span.end_line, last.span.end_col, 0, last.span.end};
    return finish(std::move(root));
  }

  ParseResult single_expression() {
    NodePtr e;
    try {
      skip_newlines();
      e = expression();
      skip_newlines();
      if (raw().kind != TokenKind::Eof) fail(DiagCode::UnexpectedWord, raw().span, {raw().lexeme});
    } catch (const Abort&) {
    } catch (const Stop&) {
    }
    return finish(std::move(e));
  }

 private:
  struct Abort {};  // a diagnostic was recorded; unwind to the statement
  struct Stop {};   // give up on the whole file

  class NestGuard {
   public:
    NestGuard(Parser& p, const SourceSpan& at) : p_(p) {
      if (++p_.nesting_ > kMaxNesting) {
        --p_.nesting_;
        p_.record(make_diagnostic(DiagCode::NestingTooDeep, at));
        throw Stop{};
      }
    }
    ~NestGuard() { --p_.nesting_; }
    NestGuard(const NestGuard&) = delete;
    NestGuard& operator=(const NestGuard&) = delete;

   private:
    Parser& p_;
  };

  ParseResult finish(NodePtr root) {
    ParseResult r;
    r.diagnostics = std::move(diags_);
    if (r.diagnostics.empty()) r.program = std::move(root);
    return r;
  }

  // ---- token access ---------------------------------------------------

  const Token& raw() const { return toks_[pos_]; }

  /// Current token; newlines are invisible while inside ( ) or [ ].
  const Token& cur() {
    if (paren_depth_ > 0) skip_newlines();
    return toks_[pos_];
  }

  void skip_newlines() {
    while (toks_[pos_].kind == TokenKind::Newline) ++pos_;
  }

  void skip_separators() {
    while (toks_[pos_].kind == TokenKind::Newline || toks_[pos_].is_punct(";")) ++pos_;
  }

  const Token& advance() {
    const Token& t = cur();
    if (t.kind != TokenKind::Eof) {
      ++pos_;
      prev_ = t.span;
    }
    return t;
  }

  bool at_punct(std::string_view p) { return cur().is_punct(p); }

  bool accept(std::string_view p) {
    if (!at_punct(p)) return false;
    advance();
    return true;
  }

  SourceSpan since(const SourceSpan& start) const { return SourceSpan::cover(start, prev_); }

  // ---- diagnostics ----------------------------------------------------

  void record(Diagnostic d) {
    diags_.push_back(std::move(d));
    if (diags_.size() >= kMaxDiagnostics) throw Stop{};
  }

  [[noreturn]] void fail(DiagCode code, SourceSpan at, std::vector<std::string> args = {},
                         std::optional<std::string> hint = std::nullopt) {
    record(make_diagnostic(code, at, std::move(args), std::move(hint)));
    throw Abort{};
  }

  /// Report whatever unexpected thing sits where a closing bracket belongs.
  [[noreturn]] void fail_close(std::string_view close) {
    const Token& t = cur();
    if (t.is_punct("=")) {
      fail(DiagCode::UnexpectedWord, t.span, {"="}, "To compare two things, use ==.");
    }
    check_unsupported_operator(t);
    const bool same_line = t.span.start_line == prev_.end_line;
    const bool value_start = t.kind == TokenKind::Number || t.kind == TokenKind::String ||
                             t.kind == TokenKind::Identifier;
    if (same_line && value_start && close != "}") {
      fail(DiagCode::UnexpectedWord, t.span, {t.lexeme},
           "Did you forget a ',' between two values?");
    }
    const DiagCode code = close == ")"   ? DiagCode::MissingCloseParen
                          : close == "]" ? DiagCode::MissingCloseBracket
                                         : DiagCode::MissingCloseBrace;
    fail(code, prev_.end_point());
  }

  void expect_close(std::string_view close) {
    if (!accept(close)) fail_close(close);
  }

  void check_unsupported_operator(const Token& t) {
    if (t.is_punct("?"))
      fail(DiagCode::Unsupported, t.span, {"The '?' shortcut"}, "Use if and else instead.");
    if (t.is_punct("=>"))
      fail(DiagCode::Unsupported, t.span, {"An arrow function"},
           "Write function name() { ... } instead.");
  }

  // ---- recovery -------------------------------------------------------

  NodePtr statement_with_recovery() {
    const std::size_t start = pos_;
    try {
      return statement();
    } catch (const Abort&) {
      synchronize(start);
      return nullptr;
    }
  }

  void synchronize(std::size_t start) {
    paren_depth_ = 0;
    if (pos_ == start && raw().kind != TokenKind::Eof) ++pos_;
    while (true) {
      const Token& t = raw();
      if (t.kind == TokenKind::Eof || t.is_punct("}")) return;
      const Token& before = toks_[pos_ - 1];
      if (pos_ > start && (before.kind == TokenKind::Newline || before.is_punct(";"))) return;
      if (t.is_punct("{")) {
        int depth = 0;
        do {
          if (raw().is_punct("{")) ++depth;
          if (raw().is_punct("}")) --depth;
          ++pos_;
        } while (depth > 0 && raw().kind != TokenKind::Eof);
        continue;
      }
      ++pos_;
    }
  }

  // ---- statements -----------------------------------------------------

  NodePtr statement() {
    skip_newlines();
    const Token& t = raw();
    if (t.is_keyword("let") || t.is_keyword("const")) {
      auto n = var_decl();
      end_statement();
      return n;
    }
    if (t.is_keyword("if")) return if_stmt();
    if (t.is_keyword("for")) return for_stmt();
    if (t.is_keyword("while")) return while_stmt();
    if (t.is_keyword("function")) return function_decl();
    if (t.is_keyword("return")) {
      auto n = return_stmt();
      end_statement();
      return n;
    }
    if (t.is_keyword("else")) fail(DiagCode::ElseWithoutIf, t.span);
    if (t.is_punct("{")) return block();
    if (t.kind == TokenKind::Identifier && t.lexeme == "var") {
      fail(DiagCode::Unsupported, t.span, {"'var'"}, "Use let instead of var.");
    }
    auto n = simple_statement();
    end_statement();
    return n;
  }

  void end_statement() {
    const Token& t = raw();
    if (t.is_punct(";") || t.kind == TokenKind::Newline) {
      ++pos_;
      return;
    }
    if (t.is_punct("}") || t.kind == TokenKind::Eof) return;
    if (t.is_punct("=")) fail(DiagCode::UnexpectedWord, t.span, {"="});
    check_unsupported_operator(t);
    fail(DiagCode::MissingSeparator, t.span);
  }

  static bool assignable(const Node& n) {
    return n.kind == NodeKind::Identifier || n.kind == NodeKind::Index;
  }

  NodePtr simple_statement() {
    const Token& first = cur();
    if (first.is_punct("++") || first.is_punct("--")) {
      fail(DiagCode::Unsupported, first.span, {"'" + first.lexeme + "' before a name"},
           "Write it after the name instead, like i" + first.lexeme + ".");
    }
    const SourceSpan start = first.span;
    NodePtr target = expression();
    const Token& t = cur();
    for (auto op : kAssignOps) {
      if (!t.is_punct(op)) continue;
      if (!assignable(*target)) fail(DiagCode::CannotAssign, target->span);
      advance();
      auto n = std::make_unique<Node>(NodeKind::Assign, start);
      n->op = std::string(op);
      n->children.push_back(std::move(target));
      n->children.push_back(expression());
      n->span = since(start);
      return n;
    }
    if (t.is_punct("++") || t.is_punct("--")) {
      if (!assignable(*target)) fail(DiagCode::CannotAssign, target->span);
      auto n = std::make_unique<Node>(NodeKind::Update, start);
      n->op = advance().lexeme;
      n->children.push_back(std::move(target));
      n->span = since(start);
      return n;
    }
    auto n = std::make_unique<Node>(NodeKind::ExprStmt, target->span);
    n->children.push_back(std::move(target));
    return n;
  }

  std::string expect_name(const Token& after) {
    skip_newlines();
    const Token& t = raw();
    if (t.kind == TokenKind::Keyword) fail(DiagCode::ReservedWord, t.span, {t.lexeme});
    if (t.kind != TokenKind::Identifier) fail(DiagCode::MissingName, after.span, {after.lexeme});
    advance();
    return t.lexeme;
  }

  NodePtr var_decl() {
    const Token& kw = advance();
    auto n = std::make_unique<Node>(NodeKind::VarDecl, kw.span);
    n->is_const = kw.lexeme == "const";
    n->name = expect_name(kw);
    if (accept("=")) {
      n->children.push_back(expression());
    } else if (n->is_const) {
      fail(DiagCode::ConstNeedsValue, since(kw.span), {n->name});
    }
    n->span = since(kw.span);
    return n;
  }

  void open_paren(const Token& kw) {
    skip_newlines();
    if (!raw().is_punct("(")) fail(DiagCode::MissingOpenParen, kw.span, {kw.lexeme});
    advance();
    ++paren_depth_;
  }

  void close_paren() {
    expect_close(")");
    --paren_depth_;
  }

  NodePtr body_statement() {
    skip_newlines();
    if (raw().is_punct("{")) return block();
    NestGuard guard(*this, raw().span);
    return statement();
  }

  NodePtr if_stmt() {
    const Token& kw = advance();
    auto n = std::make_unique<Node>(NodeKind::If, kw.span);
    open_paren(kw);
    n->children.push_back(expression());
    close_paren();
    n->children.push_back(body_statement());
    const std::size_t save = pos_;
    skip_newlines();
    if (raw().is_keyword("else")) {
      const Token& else_kw = advance();
      skip_newlines();
      if (raw().is_keyword("if")) {
        NestGuard guard(*this, else_kw.span);
        n->children.push_back(if_stmt());
      } else {
        n->children.push_back(body_statement());
      }
    } else {
      pos_ = save;
    }
    n->span = since(kw.span);
    return n;
  }

  NodePtr empty_at(const SourceSpan& where) {
    return std::make_unique<Node>(NodeKind::Empty, where.end_point());
  }

  NodePtr for_stmt() {
    const Token& kw = advance();
    auto n = std::make_unique<Node>(NodeKind::For, kw.span);
    open_paren(kw);
    if (at_punct(";")) {
      n->children.push_back(empty_at(prev_));
    } else if (cur().is_keyword("let") || cur().is_keyword("const")) {
      n->children.push_back(var_decl());
    } else {
      n->children.push_back(simple_statement());
    }
    if (!accept(";")) fail(DiagCode::ForNeedsSemicolon, cur().span);
    n->children.push_back(at_punct(";") ? empty_at(prev_) : expression());
    if (!accept(";")) {
      if (at_punct(")")) fail(DiagCode::ForNeedsSemicolon, cur().span);
      fail_close(")");
    }
    n->children.push_back(at_punct(")") ? empty_at(prev_) : simple_statement());
    close_paren();
    n->children.push_back(body_statement());
    n->span = since(kw.span);
    return n;
  }

  NodePtr while_stmt() {
    const Token& kw = advance();
    auto n = std::make_unique<Node>(NodeKind::While, kw.span);
    open_paren(kw);
    n->children.push_back(expression());
    close_paren();
    n->children.push_back(body_statement());
    n->span = since(kw.span);
    return n;
  }

  NodePtr function_decl() {
    const Token& kw = advance();
    auto n = std::make_unique<Node>(NodeKind::FunctionDecl, kw.span);
    n->name = expect_name(kw);
    const Token& name_tok = toks_[pos_ - 1];
    open_paren(name_tok);
    if (!at_punct(")")) {
      while (true) {
        const Token& p = cur();
        if (p.kind == TokenKind::Keyword) fail(DiagCode::ReservedWord, p.span, {p.lexeme});
        if (p.kind != TokenKind::Identifier) {
          if (p.is_punct(")") || p.kind == TokenKind::Eof) fail_close(")");
          fail(DiagCode::UnexpectedWord, p.span, {p.lexeme},
               "Inside the ( ) of a function, list names separated by ','.");
        }
        advance();
        auto param = std::make_unique<Node>(NodeKind::Identifier, p.span);
        param->name = p.lexeme;
        n->children.push_back(std::move(param));
        if (!accept(",")) break;
      }
    }
    close_paren();
    skip_newlines();
    if (!raw().is_punct("{")) fail(DiagCode::MissingOpenBrace, prev_.end_point());
    ++function_depth_;
    try {
      n->children.push_back(block());
    } catch (...) {
      --function_depth_;
      throw;
    }
    --function_depth_;
    n->span = since(kw.span);
    return n;
  }

  NodePtr return_stmt() {
    const Token& kw = raw();
    if (function_depth_ == 0) fail(DiagCode::ReturnOutsideFunction, kw.span);
    advance();
    auto n = std::make_unique<Node>(NodeKind::Return, kw.span);
    const Token& t = raw();
    if (!(t.kind == TokenKind::Newline || t.kind == TokenKind::Eof || t.is_punct(";") ||
          t.is_punct("}")))
      n->children.push_back(expression());
    n->span = since(kw.span);
    return n;
  }

  NodePtr block() {
    const Token& open = advance();
    NestGuard guard(*this, open.span);
    auto n = std::make_unique<Node>(NodeKind::Block, open.span);
    while (true) {
      skip_separators();
      if (raw().is_punct("}")) break;
      if (raw().kind == TokenKind::Eof) {
        fail(DiagCode::MissingCloseBrace, prev_.end_point(), {},
             "The '{' on line " + std::to_string(open.span.start_line) + " is never closed.");
      }
      if (auto stmt = statement_with_recovery()) n->children.push_back(std::move(stmt));
    }
    advance();
    n->span = since(open.span);
    return n;
  }

  // ---- expressions ----------------------------------------------------

  NodePtr expression() { return logical_or(); }

  template <typename Next>
  NodePtr binary_level(NodeKind kind, std::initializer_list<std::string_view> ops, Next next) {
    NodePtr lhs = (this->*next)();
    int chain = 0;
    while (true) {
      const Token& t = cur();
      auto it = std::find_if(ops.begin(), ops.end(), [&](auto op) { return t.is_punct(op); });
      if (it == ops.end()) return lhs;
      if (++chain > kMaxChain) fail(DiagCode::NestingTooDeep, t.span);
      advance();
      auto n = std::make_unique<Node>(kind, lhs->span);
      n->op = std::string(*it);
      n->children.push_back(std::move(lhs));
      n->children.push_back((this->*next)());
      n->span = SourceSpan::cover(n->children[0]->span, n->children[1]->span);
      lhs = std::move(n);
    }
  }

  NodePtr logical_or() { return binary_level(NodeKind::Logical, {"||"}, &Parser::logical_and); }
  NodePtr logical_and() { return binary_level(NodeKind::Logical, {"&&"}, &Parser::equality); }
  NodePtr equality() {
    return binary_level(NodeKind::Binary, {"===", "!==", "==", "!="}, &Parser::comparison);
  }
  NodePtr comparison() {
    return binary_level(NodeKind::Binary, {"<=", ">=", "<", ">"}, &Parser::additive);
  }
  NodePtr additive() { return binary_level(NodeKind::Binary, {"+", "-"}, &Parser::multiplicative); }
  NodePtr multiplicative() {
    return binary_level(NodeKind::Binary, {"*", "/", "%"}, &Parser::unary);
  }

  NodePtr unary() {
    skip_newlines();
    const Token& t = raw();
    if (t.is_punct("-") || t.is_punct("!")) {
      NestGuard guard(*this, t.span);
      advance();
      auto n = std::make_unique<Node>(NodeKind::Unary, t.span);
      n->op = t.lexeme;
      n->children.push_back(unary());
      n->span = since(t.span);
      return n;
    }
    if (t.is_punct("++") || t.is_punct("--")) {
      fail(DiagCode::Unsupported, t.span, {"'" + t.lexeme + "' before a name"},
           "Write it after the name instead, like i" + t.lexeme + ".");
    }
    return postfix();
  }

  NodePtr postfix() {
    NodePtr e = primary();
    const SourceSpan start = e->span;
    while (true) {
      const Token& t = cur();
      if (t.is_punct("(")) {
        NestGuard guard(*this, t.span);
        advance();
        ++paren_depth_;
        auto call = std::make_unique<Node>(NodeKind::Call, start);
        call->children.push_back(std::move(e));
        if (!at_punct(")")) {
          while (true) {
            call->children.push_back(expression());
            if (!accept(",")) break;
          }
        }
        expect_close(")");
        --paren_depth_;
        call->span = since(start);
        e = std::move(call);
      } else if (t.is_punct("[")) {
        NestGuard guard(*this, t.span);
        advance();
        ++paren_depth_;
        auto idx = std::make_unique<Node>(NodeKind::Index, start);
        idx->children.push_back(std::move(e));
        idx->children.push_back(expression());
        expect_close("]");
        --paren_depth_;
        idx->span = since(start);
        e = std::move(idx);
      } else if (t.is_punct(".")) {
        const Token& dot = advance();
        const Token& name = cur();
        if (name.kind != TokenKind::Identifier) fail(DiagCode::MissingName, dot.span, {"."});
        advance();
        auto m = std::make_unique<Node>(NodeKind::Member, start);
        m->name = name.lexeme;
        m->children.push_back(std::move(e));
        m->span = since(start);
        e = std::move(m);
      } else {
        return e;
      }
    }
  }

  NodePtr primary() {
    skip_newlines();
    const Token& t = raw();
    switch (t.kind) {
      case TokenKind::Number: {
        advance();
        auto n = std::make_unique<Node>(NodeKind::NumberLit, t.span);
        n->literal = number_value(t);
        return n;
      }
      case TokenKind::String: {
        advance();
        auto n = std::make_unique<Node>(NodeKind::StringLit, t.span);
        n->literal = string_value(t);
        n->quote = t.lexeme.front() == '"' ? '"' : '\'';
        return n;
      }
      case TokenKind::Identifier: {
        advance();
        auto n = std::make_unique<Node>(NodeKind::Identifier, t.span);
        n->name = t.lexeme;
        return n;
      }
      case TokenKind::Keyword:
        if (t.lexeme == "true" || t.lexeme == "false") {
          advance();
          auto n = std::make_unique<Node>(NodeKind::BoolLit, t.span);
          n->literal = t.lexeme == "true";
          return n;
        }
        fail(DiagCode::UnexpectedWord, t.span, {t.lexeme});
      case TokenKind::Punct:
        if (t.is_punct("(")) return parenthesized();
        if (t.is_punct("[")) return array_literal();
        if (t.is_punct("{"))
          fail(DiagCode::Unsupported, t.span, {"A '{' inside a value"},
               "Use a list [ ] to keep several values together.");
        if (t.is_punct(")") || t.is_punct("]") || t.is_punct(",") || t.is_punct(";"))
          missing_value_before(t);
        check_unsupported_operator(t);
        fail(DiagCode::UnexpectedWord, t.span, {t.lexeme});
      case TokenKind::Newline:
      case TokenKind::Eof:
        missing_value_before(t);
    }
    fail(DiagCode::UnexpectedWord, t.span, {t.lexeme});
  }

  [[noreturn]] void missing_value_before(const Token& t) {
    if (pos_ > 0) {
      std::size_t i = pos_;
      while (i > 0 && toks_[i - 1].kind == TokenKind::Newline) --i;
      if (i > 0) fail(DiagCode::MissingValue, prev_.end_point(), {toks_[i - 1].lexeme});
    }
    fail(DiagCode::UnexpectedWord, t.span, {t.lexeme});
  }

  NodePtr parenthesized() {
    const Token& open = advance();
    NestGuard guard(*this, open.span);
    ++paren_depth_;
    NodePtr inner = expression();
    expect_close(")");
    --paren_depth_;
    if (raw().is_punct("=>")) check_unsupported_operator(raw());
    // The node owns its parentheses, so an enclosing span never starts or
    // ends halfway through a bracket pair.
    inner->span = SourceSpan::cover(open.span, prev_);
    return inner;
  }

  NodePtr array_literal() {
    const Token& open = advance();
    NestGuard guard(*this, open.span);
    ++paren_depth_;
    auto n = std::make_unique<Node>(NodeKind::ArrayLit, open.span);
    while (!at_punct("]")) {
      n->children.push_back(expression());
      if (!accept(",")) break;
    }
    expect_close("]");
    --paren_depth_;
    n->span = since(open.span);
    return n;
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
  SourceSpan prev_;
  int paren_depth_ = 0;
  int nesting_ = 0;
  int function_depth_ = 0;
  std::vector<Diagnostic> diags_;
};

bool earlier(const Diagnostic& a, const Diagnostic& b) {
  if (a.span.start_line != b.span.start_line) return a.span.start_line < b.span.start_line;
  return a.span.start_col < b.span.start_col;
}

// A second complaint on the same line is almost always fallout from the
// first, so keep only the earliest one per line.
void one_per_line(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), earlier);
  auto last = std::unique(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return a.span.start_line == b.span.start_line;
  });
  diags.erase(last, diags.end());
  if (diags.size() > kMaxDiagnostics) diags.resize(kMaxDiagnostics);
}

}  // namespace

ParseResult parse(std::span<const Token> tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::Eof) {
    throw std::invalid_argument("token list must end with Eof");
  }
  ParseResult r = Parser(tokens).program();
  one_per_line(r.diagnostics);
  return r;
}

ParseResult parse_program(std::string_view source) {
  LexResult lexed = tokenize(source);
  if (lexed.diagnostics.size() == 1 && lexed.diagnostics[0].code == "E018") {
    return ParseResult{nullptr, std::move(lexed.diagnostics)};
  }
  ParseResult parsed = parse(lexed.tokens);
  if (lexed.diagnostics.empty()) return parsed;
  auto all = std::move(lexed.diagnostics);
  all.insert(all.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
  one_per_line(all);
  return ParseResult{nullptr, std::move(all)};
}

ParseResult parse_expression(std::string_view source) {
  LexResult lexed = tokenize(source);
  if (!lexed.ok()) return ParseResult{nullptr, std::move(lexed.diagnostics)};
  return Parser(lexed.tokens).single_expression();
}

}  // namespace brush
