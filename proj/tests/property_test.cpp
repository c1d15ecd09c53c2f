#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

#include "brush/builtins.hpp"
#include "brush/drawlist_json.hpp"
#include "brush/engine.hpp"
#include "brush/interpreter.hpp"
#include "brush/lexer.hpp"
#include "brush/parser.hpp"
#include "brush/png.hpp"
#include "brush/raster.hpp"
#include "brush/svg.hpp"
#include "oracle.hpp"
#include "program_gen.hpp"
#include "support.hpp"

using namespace brush;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> corpus_sources() {
  std::vector<std::string> out;
  for (auto name : {"example1_grid.js", "example2_spiral.js", "example3_animation.js"})
    out.push_back(testing::read_text(testing::source_dir() / "corpus" / name));
  return out;
}

// Walk every node, parent before children.
template <class F>
void each_node(const ast::Node& n, F&& f) {
  f(n);
  for (const auto& c : n.children) each_node(*c, f);
}

// A return outside a function body cannot be re-parsed on its own.
bool has_loose_return(const ast::Node& n) {
  if (n.kind == ast::NodeKind::Return) return true;
  if (n.kind == ast::NodeKind::FunctionDecl) return false;
  for (const auto& c : n.children)
    if (has_loose_return(*c)) return true;
  return false;
}

// Tokens after which a statement cannot be complete.
bool leaves_statement_open(const Token& t) {
  if (t.kind == TokenKind::Keyword) return t.lexeme != "true" && t.lexeme != "false";
  if (t.kind != TokenKind::Punct) return false;
  return t.lexeme != ")" && t.lexeme != "]" && t.lexeme != "}" && t.lexeme != "++" &&
         t.lexeme != "--" && t.lexeme != ";";
}

}  // namespace

TEST_SUITE("property") {

TEST_CASE("round trip: printing and re-parsing gives the same tree") {
  auto sources = corpus_sources();
  for (int seed = 0; seed < 200; ++seed) sources.push_back(testing::ProgramGen(seed).program());
  for (const auto& src : sources) {
    auto a = parse_program(src);
    REQUIRE_MESSAGE(a.ok(), src);
    const std::string printed = ast::to_source(*a.program);
    auto b = parse_program(printed);
    REQUIRE_MESSAGE(b.ok(), printed);
    CHECK(ast::structurally_equal(*a.program, *b.program));
    CHECK(ast::to_source(*b.program) == printed);
  }
}

TEST_CASE("error monotonicity: cutting a statement short is a syntax error") {
  auto sources = corpus_sources();
  for (int seed = 0; seed < 40; ++seed) sources.push_back(testing::ProgramGen(1000 + seed).program(6));
  for (const auto& src : sources) {
    const auto lexed = tokenize(src);
    REQUIRE(lexed.ok());
    int open = 0;
    for (std::size_t k = 0; k + 1 < lexed.tokens.size(); ++k) {
      const Token& t = lexed.tokens[k];
      if (t.is_punct("(") || t.is_punct("[") || t.is_punct("{")) ++open;
      if (t.is_punct(")") || t.is_punct("]") || t.is_punct("}")) --open;
      if (t.kind == TokenKind::Newline) continue;
      if (open == 0 && !leaves_statement_open(t)) continue;
      const std::string prefix = src.substr(0, t.span.end);
      const auto r = parse_program(prefix);
      CAPTURE(prefix);
      REQUIRE_FALSE(r.ok());
      REQUIRE_FALSE(r.diagnostics.empty());
      for (const auto& d : r.diagnostics) CHECK(d.category == Category::Syntax);
    }
  }
}

TEST_CASE("every byte prefix parses or reports, never anything else") {
  for (const auto& src : corpus_sources()) {
    for (std::size_t n = 0; n <= src.size(); ++n) {
      const auto r = parse_program(std::string_view(src).substr(0, n));
      CHECK((r.ok() == r.diagnostics.empty()));
      for (const auto& d : r.diagnostics) CHECK(d.category == Category::Syntax);
    }
  }
}

TEST_CASE("span fidelity: each node's text re-parses to the same subtree") {
  for (int seed = 0; seed < 60; ++seed) {
    const std::string src = testing::ProgramGen(5000 + seed).program(8);
    auto parsed = parse_program(src);
    REQUIRE(parsed.ok());
    each_node(*parsed.program, [&](const ast::Node& n) {
      using K = ast::NodeKind;
      if (n.kind == K::Program || n.kind == K::Empty || has_loose_return(n)) return;
      const std::string text(n.span.slice(src));
      CAPTURE(text);
      if (n.is_expression()) {
        auto e = parse_expression(text);
        REQUIRE(e.ok());
        CHECK(ast::structurally_equal(*e.program, n));
      } else {
        auto s = parse_program(text);
        REQUIRE(s.ok());
        REQUIRE(s.program->children.size() == 1);
        CHECK(ast::structurally_equal(s.program->child(0), n));
      }
    });
  }
}

TEST_CASE("generated programs run cleanly and deterministically") {
  for (int seed = 0; seed < 150; ++seed) {
    const std::string src = testing::ProgramGen(seed).program();
    RunConfig c;
    c.seed = static_cast<std::uint64_t>(seed);
    const auto a = run_script(src, c);
    REQUIRE_MESSAGE(a.ok(), src);
    const auto b = run_script(src, c);
    CHECK(a.frames == b.frames);
    CHECK(a.steps_used == b.steps_used);
  }
}

TEST_CASE("stream discipline: one draw per Math.random or randomColor call") {
  for (int seed = 0; seed < 150; ++seed) {
    const std::string src = testing::ProgramGen(seed).program();
    auto parsed = parse_program(src);
    REQUIRE(parsed.ok());
    Interpreter in(*parsed.program, RunConfig{});
    const auto r = in.run();
    REQUIRE(r.ok());
    CHECK(static_cast<double>(r.rng_draws) == in.global("draws")->as_number());
  }
}

TEST_CASE("scope soundness: block locals vanish when the block ends") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int depth = 1 + static_cast<int>(rng() % 4);
    std::string src;
    std::vector<std::string> names;
    for (int d = 0; d < depth; ++d) {
      const std::string tag = std::to_string(d);
      switch (rng() % 5) {
        case 0: src += "if (true) {\n"; break;
        case 1: src += "for (let q" + tag + " = 0; q" + tag + " < 1; q" + tag + "++) {\n"; break;
        case 2: src += "let once" + tag + " = true\nwhile (once" + tag + ") {\nonce" + tag + " = false\n"; break;
        case 3: src += "{\n"; break;
        default: src += "if (false) { } else {\n"; break;
      }
      names.push_back("local" + tag);
      src += "let " + names.back() + " = " + tag + "\n";
      src += "let seen" + tag + " = " + names.front() + "\n";
    }
    for (int d = 0; d < depth; ++d) src += "}\n";
    CAPTURE(src);
    REQUIRE(run_script(src).ok());
    for (const auto& n : names) {
      auto r = run_script(src + "let probe = " + n + "\n");
      REQUIRE(r.diagnostics.size() == 1);
      CHECK(r.diagnostics[0].code == "E100");
    }
  }
}

TEST_CASE("frame isolation, frame bound and state persistence") {
  const std::string src =
      "let count = 0\n"
      "function tick() {\n"
      "  drawText('f', count, 10, 'black')\n"
      "  if (count % 2 == 0) { drawCircle(count, 0, 1, randomColor()) }\n"
      "  count++\n"
      "  requestAnimationFrame(tick)\n"
      "}\n"
      "requestAnimationFrame(tick)\n";
  auto parsed = parse_program(src);
  REQUIRE(parsed.ok());
  for (int frames : {1, 2, 7, 30}) {
    RunConfig c;
    c.max_frames = frames;
    Interpreter in(*parsed.program, c);
    const auto r = in.run();
    REQUIRE(r.ok());
    CHECK(static_cast<int>(r.frames.size()) == frames);
    CHECK(r.frames[0].empty());
    for (int k = 1; k < frames; ++k) {
      // every command drawn in frame k carries the counter value k - 1
      CHECK(std::get<shape::Text>(r.frames[k][0].shape).x == k - 1);
      for (const auto& cmd : r.frames[k]) {
        if (auto* t = std::get_if<shape::Text>(&cmd.shape)) CHECK(t->x == k - 1);
        if (auto* ci = std::get_if<shape::Circle>(&cmd.shape)) CHECK(ci->cx == k - 1);
      }
    }
    CHECK(in.global("count")->as_number() == frames - 1);
    const auto again = run_frames(*parsed.program, c);
    CHECK(again.frames == r.frames);
  }
}

TEST_CASE("a failing frame keeps the completed frames and its partial list") {
  auto r = run_script(
      "let n = 0\n"
      "function tick() {\n"
      "  drawCircle(1, 1, 1, 'red')\n"
      "  if (n == 2) { drawCircle(1, 1, -1, 'red') }\n"
      "  n++\n"
      "  requestAnimationFrame(tick)\n"
      "}\n"
      "tick()",
      [] {
        RunConfig c;
        c.max_frames = 10;
        return c;
      }());
  REQUIRE(r.diagnostics.size() == 1);
  REQUIRE(r.frames.size() == 3);
  CHECK(r.frames[2].size() == 1);
}

TEST_CASE("limits are enforced exactly") {
  auto count_run = [](const std::string& src, ExecLimits limits) {
    auto parsed = parse_program(src);
    REQUIRE(parsed.ok());
    return evaluate(*parsed.program, limits);
  };
  ExecLimits draws;
  draws.max_draw_commands_per_frame = 10;
  CHECK(count_run("for (let i = 0; i < 10; i++) { drawCircle(1, 1, 1, 'red') }", draws).ok());
  CHECK(count_run("for (let i = 0; i < 11; i++) { drawCircle(1, 1, 1, 'red') }", draws)
            .diagnostics.at(0).code == "E114");

  ExecLimits items;
  items.max_array_length = 5;
  CHECK(count_run("let a = [1, 2, 3, 4, 5]", items).ok());
  CHECK(count_run("let a = [1, 2, 3, 4, 5, 6]", items).diagnostics.at(0).code == "E115");
  CHECK(count_run("let a = [1, 2, 3, 4]\na.push(5)", items).ok());
  CHECK(count_run("let a = [1, 2, 3, 4, 5]\na.push(6)", items).diagnostics.at(0).code == "E115");

  ExecLimits depth;
  depth.max_call_depth = 10;
  const std::string rec = "function f(n) { if (n == 0) { return 0 } return f(n - 1) }\n";
  CHECK(count_run(rec + "f(9)", depth).ok());
  CHECK(count_run(rec + "f(10)", depth).diagnostics.at(0).code == "E108");

  const std::string loop = "let s = 0\nfor (let i = 0; i < 100; i++) { s += i }";
  const auto used = count_run(loop, {}).steps_used;
  ExecLimits steps;
  steps.max_steps_per_frame = used;
  CHECK(count_run(loop, steps).ok());
  steps.max_steps_per_frame = used - 1;
  CHECK(count_run(loop, steps).diagnostics.at(0).code == "E107");
}

TEST_CASE("budget soundness: steps never exceed the budget") {
  ExecLimits limits;
  limits.max_steps_per_frame = 5000;
  for (const char* src : {"while (true) { }", "function f() { f() }\nf()",
                          "let a = []\nwhile (true) { a.push(1) }",
                          "for (let i = 0; i < 1000000; i++) { drawCircle(1, 1, 1, 'red') }"}) {
    auto parsed = parse_program(src);
    REQUIRE(parsed.ok());
    const auto r = evaluate(*parsed.program, limits);
    CHECK_FALSE(r.ok());
    CHECK(r.steps_used <= limits.max_steps_per_frame + 100);
  }
}

TEST_CASE("oracle equivalence on random polygons") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coord(-8, 72);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Point> poly(3 + rng() % 8);
    for (auto& p : poly) p = {coord(rng), coord(rng)};
    if (trial % 3 == 0)
      for (auto& p : poly) p = {std::round(p.x * 2) / 2, std::round(p.y * 2) / 2};
    FrameBuffer fast(64, 64), slow(64, 64);
    fill_polygon(poly, fast, Rgba{0, 0, 0, 255});
    for (int y = 0; y < 64; ++y)
      for (int x = 0; x < 64; ++x)
        if (testing::point_in_polygon(poly, x + 0.5, y + 0.5)) slow.set(x, y, Rgba{0, 0, 0, 255});
    REQUIRE(fast == slow);
  }
}

TEST_CASE("symmetry: centered circles are mirror invariant") {
  for (int size : {10, 11, 64, 65}) {
    for (double r : {0.7, 3.0, 4.5, 10.25, 31.9}) {
      FrameBuffer fb(size, size);
      rasterize({{shape::Circle{size / 2.0, size / 2.0, r}, Rgba{9, 9, 9, 255}}}, fb);
      for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
          REQUIRE(fb.at(x, y) == fb.at(size - 1 - x, y));
          REQUIRE(fb.at(x, y) == fb.at(x, size - 1 - y));
        }
    }
  }
}

TEST_CASE("painter's order: overlap takes the later color") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(10, 54);
  for (int trial = 0; trial < 100; ++trial) {
    const DrawCommand a{shape::Circle{u(rng), u(rng), u(rng) / 2}, Rgba{255, 0, 0, 255}};
    const DrawCommand b{shape::Star{u(rng), u(rng), 5, u(rng) / 2 + 2, 2}, Rgba{0, 0, 255, 255}};
    FrameBuffer fb(64, 64);
    rasterize({a, b}, fb);
    for (int y = 0; y < 64; ++y)
      for (int x = 0; x < 64; ++x) {
        const bool in_a = testing::oracle_inside(a, x + 0.5, y + 0.5);
        const bool in_b = testing::oracle_inside(b, x + 0.5, y + 0.5);
        if (in_b) REQUIRE(fb.at(x, y) == b.color);
        else if (in_a) REQUIRE(fb.at(x, y) == a.color);
      }
  }
}

TEST_CASE("geometry sharing: svg polygons list the raster vertices") {
  const DrawCommand cmd{shape::Star{31.3, 20.7, 7, 15.1, 6.2}, kWhite};
  const std::string svg = export_svg({cmd});
  std::string expected;
  for (const auto& p : outline(cmd.shape)) {
    if (!expected.empty()) expected += ' ';
    expected += format_number(p.x) + "," + format_number(p.y);
  }
  CHECK(svg.find("points=\"" + expected + "\"") != std::string::npos);
}

TEST_CASE("emission purity") {
  const auto& spec = builtin(BuiltinId::DrawOval);
  const std::vector<Value> args = {Value(1.5), Value(2.0), Value(3.0), Value(4.0), Value(0.25), Value("teal")};
  CHECK(validate_and_emit(spec, args) == validate_and_emit(spec, args));
}

TEST_CASE("draw-list round trip is byte identical for generated programs") {
  for (int seed = 0; seed < 60; ++seed) {
    const std::string src = testing::ProgramGen(9000 + seed).program();
    auto r = run_script(src);
    REQUIRE(r.ok());
    const std::string a = serialize_drawlist(r.frames, CanvasConfig{});
    const auto back = parse_drawlist(a);
    CHECK(back.frames == r.frames);
    CHECK(serialize_drawlist(back.frames, back.canvas) == a);
  }
}

TEST_CASE("rendering a dumped draw list equals running directly") {
  for (int seed = 0; seed < 20; ++seed) {
    const std::string src = testing::ProgramGen(7000 + seed).program();
    RunConfig c;
    c.canvas = CanvasConfig{96, 96};
    auto r = run_script(src, c);
    REQUIRE(r.ok());
    FrameBuffer direct(96, 96);
    rasterize(r.frames[0], direct);
    const auto back = parse_drawlist(serialize_drawlist(r.frames, c.canvas));
    FrameBuffer replay(96, 96);
    rasterize(back.frames[0], replay);
    CHECK(encode_png(direct) == encode_png(replay));
  }
}

TEST_CASE("catalog closure and category fidelity over the fixture sweep") {
  std::set<std::string> codes;
  for (const auto& e : diagnostic_catalog()) codes.insert(std::string(e.code));
  int scripts = 0;
  for (const char* dir : {"syntax", "runtime"}) {
    for (const auto& entry : fs::directory_iterator(testing::fixture_path(dir))) {
      if (entry.path().extension() != ".js") continue;
      ++scripts;
      const auto src = testing::read_text(entry.path());
      auto r = run_script(src);
      REQUIRE_FALSE(r.diagnostics.empty());
      for (const auto& d : r.diagnostics) {
        CHECK(codes.count(d.code) == 1);
        CHECK(d.message.size() <= 120);
        if (!r.parsed) CHECK(d.category == Category::Syntax);
        else CHECK(d.category != Category::Syntax);
      }
    }
  }
  CHECK(scripts >= 40);
}

}
