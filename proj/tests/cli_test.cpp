#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "brush/engine.hpp"
#include "support.hpp"

using namespace brush;
using testing::run_cli;
namespace fs = std::filesystem;

namespace {

std::string corpus(const char* name) { return (testing::source_dir() / "corpus" / name).string(); }

fs::path write_script(const fs::path& dir, const std::string& name, const std::string& text) {
  std::ofstream(dir / name) << text;
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("version and usage errors") {
  auto v = run_cli({"--version"});
  CHECK(v.exit_code == 0);
  CHECK(v.out.find(std::string(kEngineVersion)) != std::string::npos);
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"bogus"}).exit_code == 2);
  CHECK(run_cli({"run"}).exit_code == 2);
  CHECK(run_cli({"run", "/nonexistent/file.js"}).exit_code == 2);
  CHECK(run_cli({"run", corpus("example1_grid.js"), "--frames", "0"}).exit_code == 2);
  CHECK(run_cli({"run", corpus("example1_grid.js"), "--size", "12"}).exit_code == 2);
  CHECK(run_cli({"run", corpus("example1_grid.js"), "--seed", "-4"}).exit_code == 2);
  CHECK(run_cli({"run", corpus("example1_grid.js"), "--format", "gif"}).exit_code == 2);
}

TEST_CASE("run writes a png") {
  const auto dir = testing::temp_dir("run");
  const auto out = dir / "grid.png";
  auto r = run_cli({"run", corpus("example1_grid.js"), "--seed", "0", "--out", out.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
  const auto img = testing::decode_png(testing::read_bytes(out));
  CHECK(img.width == 800);
  CHECK(img.height == 600);
  fs::remove_all(dir);
}

TEST_CASE("--size and svg output") {
  const auto dir = testing::temp_dir("svg");
  auto r = run_cli({"run", corpus("example1_grid.js"), "--size", "320x200", "--format", "svg", "--out",
                    (dir / "g.svg").string()});
  CHECK(r.exit_code == 0);
  const auto svg = testing::read_text(dir / "g.svg");
  CHECK(svg.find("width=\"320\"") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("multi-frame runs name files frame_NNNN") {
  const auto dir = testing::temp_dir("anim");
  auto r = run_cli({"run", corpus("example3_animation.js"), "--frames", "3", "--out", dir.string()});
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "frame_0000.png"));
  CHECK(fs::exists(dir / "frame_0001.png"));
  CHECK(fs::exists(dir / "frame_0002.png"));
  CHECK_FALSE(fs::exists(dir / "frame_0003.png"));
  fs::remove_all(dir);
}

TEST_CASE("diagnostics go to stderr with exit 1") {
  const auto dir = testing::temp_dir("bad");
  const auto script = write_script(dir, "bad.js", "let x = 1\ndrawCircle(x, 1, 'red')\n");
  auto r = run_cli({"run", script.string(), "--out", (dir / "bad.png").string()});
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("[E102]") != std::string::npos);
  CHECK(r.err.find("hint:") != std::string::npos);
  // runtime errors still save the picture so far
  CHECK(fs::exists(dir / "bad.png"));

  const auto syn = write_script(dir, "syn.js", "let = 1\n");
  auto s = run_cli({"run", syn.string(), "--out", (dir / "syn.png").string()});
  CHECK(s.exit_code == 1);
  CHECK_FALSE(fs::exists(dir / "syn.png"));
  fs::remove_all(dir);
}

TEST_CASE("check") {
  auto ok = run_cli({"check", corpus("example2_spiral.js")});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.empty());
  const auto three = (testing::fixture_path("syntax/three_errors.js")).string();
  auto bad = run_cli({"check", three, "--json"});
  CHECK(bad.exit_code == 1);
  const auto arr = nlohmann::json::parse(bad.out);
  CHECK(arr.size() == 3);
  auto plain = run_cli({"check", three});
  CHECK(plain.exit_code == 1);
  CHECK(plain.out.find("2:11 [E001]") != std::string::npos);
}

TEST_CASE("dump and render give identical pngs") {
  const auto dir = testing::temp_dir("dump");
  auto r = run_cli({"run", corpus("example2_spiral.js"), "--out", (dir / "direct.png").string(),
                    "--dump-drawlist", (dir / "list.json").string()});
  REQUIRE(r.exit_code == 0);
  auto rr = run_cli({"render", (dir / "list.json").string(), "--out", (dir / "again.png").string()});
  CHECK(rr.exit_code == 0);
  CHECK(testing::read_bytes(dir / "direct.png") == testing::read_bytes(dir / "again.png"));
  std::ofstream(dir / "broken.json") << "{";
  CHECK(run_cli({"render", (dir / "broken.json").string()}).exit_code == 2);
  fs::remove_all(dir);
}

TEST_CASE("BRUSH_SEED sets the default seed") {
  const auto dir = testing::temp_dir("seed");
  const auto script = write_script(dir, "c.js", "drawCircle(50, 50, 40, randomColor())\n");
  auto a = run_cli({"run", script.string(), "--size", "100x100", "--out", (dir / "a.png").string()},
                   {}, {"BRUSH_SEED=5"});
  auto b = run_cli({"run", script.string(), "--size", "100x100", "--seed", "5", "--out",
                    (dir / "b.png").string()});
  auto c = run_cli({"run", script.string(), "--size", "100x100", "--out", (dir / "c.png").string()});
  REQUIRE(a.exit_code == 0);
  CHECK(testing::read_bytes(dir / "a.png") == testing::read_bytes(dir / "b.png"));
  CHECK(testing::read_bytes(dir / "a.png") != testing::read_bytes(dir / "c.png"));
  fs::remove_all(dir);
}

TEST_CASE("manifest and catalog print JSON") {
  auto m = run_cli({"manifest"});
  CHECK(m.exit_code == 0);
  CHECK(nlohmann::json::parse(m.out)["functions"].size() == 15);
  auto c = run_cli({"catalog"});
  CHECK(c.exit_code == 0);
  CHECK(nlohmann::json::parse(c.out)["codes"].size() > 40);
}

TEST_CASE("serve --stdio") {
  auto r = run_cli({"serve", "--stdio", "--seed", "8"}, "{\"source\":\"\"}\nnope\n");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string a, b;
  REQUIRE(std::getline(lines, a));
  REQUIRE(std::getline(lines, b));
  CHECK(nlohmann::json::parse(a)["seed"] == 8);
  CHECK(nlohmann::json::parse(b)["status"] == "error");
}

}
