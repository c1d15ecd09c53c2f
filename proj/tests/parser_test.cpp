#include <doctest.h>

#include "brush/parser.hpp"
#include "support.hpp"

using namespace brush;
using ast::NodeKind;

namespace {

const ast::Node& first_stmt(const ParseResult& r) { return r.program->child(0); }

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("declarations and calls") {
  auto r = parse_program("const n = 3\nlet colors = ['red', 'blue']\ndrawCircle(1, 2, 3, colors[0])");
  REQUIRE(r.ok());
  REQUIRE(r.program->children.size() == 3);
  CHECK(first_stmt(r).kind == NodeKind::VarDecl);
  CHECK(first_stmt(r).is_const);
  CHECK(r.program->child(1).child(0).kind == NodeKind::ArrayLit);
  const auto& call = r.program->child(2).child(0);
  CHECK(call.kind == NodeKind::Call);
  CHECK(call.children.size() == 5);
  CHECK(call.child(4).kind == NodeKind::Index);
}

TEST_CASE("precedence follows JavaScript") {
  auto r = parse_expression("1 + 2 * 3 - 4 / 2 % 3");
  REQUIRE(r.ok());
  CHECK(ast::to_source(*r.program) == "(1 + (2 * 3)) - ((4 / 2) % 3)");
  r = parse_expression("a || b && c == d < e + 1");
  REQUIRE(r.ok());
  CHECK(ast::to_source(*r.program) == "a || (b && (c == (d < (e + 1))))");
  r = parse_expression("-x * !y");
  REQUIRE(r.ok());
  CHECK(ast::to_source(*r.program) == "(-x) * (!y)");
}

TEST_CASE("newlines end statements, semicolons optional") {
  auto a = parse_program("let x = 1\nx = x + 1\n");
  auto b = parse_program("let x = 1; x = x + 1;");
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(ast::structurally_equal(*a.program, *b.program));
}

TEST_CASE("an expression may continue after an operator at line end") {
  auto r = parse_program("let x = 1 +\n  2");
  REQUIRE(r.ok());
  CHECK(first_stmt(r).child(0).kind == NodeKind::Binary);
}

TEST_CASE("else on the same line as a braceless body needs a separator") {
  CHECK(parse_program("if (a) b() else c()").diagnostics.at(0).code == "E020");
  CHECK(parse_program("if (a) b(); else c()").ok());
}

TEST_CASE("control flow shapes") {
  auto r = parse_program(
      "for (let i = 0; i < 3; i++) { }\n"
      "while (false) x = 1\n"
      "if (a) b()\nelse if (c) d()\nelse { e() }\n"
      "function f(p, q) { return p + q }");
  REQUIRE(r.ok());
  const auto& f = r.program->child(0);
  CHECK(f.kind == NodeKind::For);
  CHECK(f.children.size() == 4);
  CHECK(r.program->child(1).kind == NodeKind::While);
  const auto& i = r.program->child(2);
  CHECK(i.kind == NodeKind::If);
  CHECK(i.child(2).kind == NodeKind::If);
  const auto& fn = r.program->child(3);
  CHECK(fn.kind == NodeKind::FunctionDecl);
  CHECK(fn.name == "f");
  CHECK(fn.param_count() == 2);
}

TEST_CASE("for loop parts may be empty") {
  auto r = parse_program("for (;;) { }");
  REQUIRE(r.ok());
  CHECK(first_stmt(r).child(0).kind == NodeKind::Empty);
  CHECK(first_stmt(r).child(1).kind == NodeKind::Empty);
}

TEST_CASE("compound assignment and update") {
  auto r = parse_program("a += 2\nb--\nc[1] = 3");
  REQUIRE(r.ok());
  CHECK(r.program->child(0).op == "+=");
  CHECK(r.program->child(1).kind == NodeKind::Update);
  CHECK(r.program->child(2).child(0).kind == NodeKind::Index);
  CHECK(parse_program("d.e = 4").diagnostics.at(0).code == "E014");
}

TEST_CASE("spans cover their source") {
  const std::string src = "let total = size * 2 + 1";
  auto r = parse_program(src);
  REQUIRE(r.ok());
  const auto& init = first_stmt(r).child(0);
  CHECK(init.span.slice(src) == "size * 2 + 1");
  CHECK(first_stmt(r).span.slice(src) == src);
}

TEST_CASE("unsupported JavaScript gets a friendly rejection") {
  CHECK(parse_program("var x = 1").diagnostics.at(0).code == "E012");
  CHECK(parse_program("let f = (a) => a").diagnostics.at(0).code == "E012");
  CHECK(parse_program("let o = {a: 1}").diagnostics.at(0).code == "E012");
  CHECK(parse_program("let t = a ? 1 : 2").diagnostics.at(0).code == "E012");
  CHECK(parse_program("++x").diagnostics.at(0).code == "E012");
}

TEST_CASE("a missing comma between arguments is pointed out") {
  auto r = parse_program("drawCircle(1 2, 3, 'red')");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].code == "E007");
  REQUIRE(r.diagnostics[0].hint);
  CHECK(r.diagnostics[0].hint->find("','") != std::string::npos);
}

TEST_CASE("single = inside a condition suggests ==") {
  auto r = parse_program("if (x = 3) { }");
  REQUIRE_FALSE(r.diagnostics.empty());
  REQUIRE(r.diagnostics[0].hint);
  CHECK(r.diagnostics[0].hint->find("==") != std::string::npos);
}

TEST_CASE("recovery reports later statements") {
  auto r = parse_program("let = 1\nlet ok = 2\nconst c\n");
  REQUIRE(r.diagnostics.size() == 2);
  CHECK(r.diagnostics[0].span.start_line == 1);
  CHECK(r.diagnostics[1].span.start_line == 3);
  CHECK_FALSE(r.ok());
}

TEST_CASE("at most one diagnostic per line") {
  auto r = parse_program("let a = 1 # 2 @ 3\nlet b = ‘x’\n");
  REQUIRE(r.diagnostics.size() == 2);
  CHECK(r.diagnostics[0].span.start_line == 1);
  CHECK(r.diagnostics[1].span.start_line == 2);
}

TEST_CASE("deep nesting is refused without crashing") {
  std::string deep(5000, '(');
  deep += "1";
  deep += std::string(5000, ')');
  auto r = parse_program("let x = " + deep);
  REQUIRE_FALSE(r.diagnostics.empty());
  CHECK(r.diagnostics[0].code == "E019");

  std::string blocks;
  for (int i = 0; i < 200; ++i) blocks += "if (true) {\n";
  for (int i = 0; i < 200; ++i) blocks += "}\n";
  CHECK(parse_program(blocks).diagnostics.at(0).code == "E019");

  std::string chain = "let y = 1";
  for (int i = 0; i < 5000; ++i) chain += " + 1";
  auto c = parse_program(chain);
  REQUIRE_FALSE(c.ok());
  CHECK(c.diagnostics[0].code == "E019");
}

TEST_CASE("diagnostics are capped") {
  std::string src;
  for (int i = 0; i < 100; ++i) src += "let = 1\n";
  CHECK(parse_program(src).diagnostics.size() == kMaxDiagnostics);
}

TEST_CASE("syntax fixture manifest") {
  const auto cases = testing::load_expectations(testing::fixture_path("syntax/expectations.tsv"));
  CHECK(cases.size() == 30);
  for (const auto& c : cases) {
    CAPTURE(c.file);
    const auto r = parse_program(testing::read_text(testing::fixture_path("syntax/" + c.file)));
    REQUIRE(r.diagnostics.size() == c.expected.size());
    for (std::size_t i = 0; i < c.expected.size(); ++i) {
      CHECK(r.diagnostics[i].code == c.expected[i].code);
      CHECK(r.diagnostics[i].category == Category::Syntax);
      CHECK(r.diagnostics[i].span.start_line == c.expected[i].line);
      CHECK(r.diagnostics[i].span.start_col == c.expected[i].col);
    }
  }
}

}
