// Command-line front end: run, check, render, serve, manifest, catalog.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "brush/builtins.hpp"
#include "brush/diagnostics.hpp"
#include "brush/drawlist_json.hpp"
#include "brush/engine.hpp"
#include "brush/parser.hpp"
#include "brush/png.hpp"
#include "brush/raster.hpp"
#include "brush/server.hpp"
#include "brush/svg.hpp"

namespace fs = std::filesystem;
using namespace brush;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{fmt::format("cannot read '{}'", path)};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{fmt::format("cannot write '{}'", path.string())};
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) throw UsageError{fmt::format("cannot write '{}'", path.string())};
}

std::uint64_t parse_seed(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw UsageError{fmt::format("{} must be a whole number from 0 to 2^64-1, got '{}'", what, text)};
  return v;
}

std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_seed(*flag, "--seed");
  if (const char* env = std::getenv("BRUSH_SEED"); env && *env) return parse_seed(env, "BRUSH_SEED");
  return 0;
}

CanvasConfig parse_size(const std::optional<std::string>& text) {
  CanvasConfig c;
  if (!text) return c;
  const auto x = text->find('x');
  bool ok = x != std::string::npos;
  if (ok) {
    const char* s = text->data();
    auto r1 = std::from_chars(s, s + x, c.width);
    auto r2 = std::from_chars(s + x + 1, s + text->size(), c.height);
    ok = r1.ec == std::errc() && r1.ptr == s + x && r2.ec == std::errc() &&
         r2.ptr == s + text->size() && c.valid();
  }
  if (!ok)
    throw UsageError{fmt::format("--size must look like 800x600 with sides from 1 to {}, got '{}'",
                                 kMaxCanvasSide, *text)};
  return c;
}

void print_diagnostics(const std::vector<Diagnostic>& diags, std::string_view source,
                       std::ostream& out) {
  for (const auto& d : diags) out << format_diagnostic(d, source, DiagnosticStyle::Pretty) << '\n';
}

// Write one image per frame. Multi-frame output goes into a directory as
// frame_0000.png, frame_0001.png, ...; a single frame goes to `out` itself.
void write_images(const std::vector<DisplayList>& frames, const CanvasConfig& canvas,
                  const std::string& format, const fs::path& out, bool multi) {
  if (multi) fs::create_directories(out);
  DisplayList so_far;
  render_frames(frames, canvas, [&](std::size_t i, const FrameBuffer& fb) {
    const fs::path target = multi ? out / fmt::format("frame_{:04d}.{}", i, format) : out;
    if (format == "png") {
      const auto bytes = encode_png(fb);
      write_file(target, bytes.data(), bytes.size());
    } else {
      so_far.insert(so_far.end(), frames[i].begin(), frames[i].end());
      const std::string svg = export_svg(so_far, canvas);
      write_file(target, svg.data(), svg.size());
    }
  });
}

struct RunOptions {
  std::string script;
  std::optional<std::string> out;
  int frames = 1;
  std::optional<std::string> seed;
  std::optional<std::string> size;
  std::string format = "png";
  std::optional<std::string> dump_drawlist;
};

int cmd_run(const RunOptions& o) {
  const std::string source = read_file(o.script);
  RunConfig config;
  config.seed = resolve_seed(o.seed);
  config.canvas = parse_size(o.size);
  config.max_frames = o.frames;

  ScriptResult result = run_script(source, config);
  print_diagnostics(result.diagnostics, source, std::cerr);
  if (!result.parsed) return kExitDiagnostics;

  if (o.dump_drawlist) {
    const std::string json = serialize_drawlist(result.frames, config.canvas);
    write_file(*o.dump_drawlist, json.data(), json.size());
  }
  const bool multi = o.frames > 1;
  fs::path out;
  if (o.out) {
    out = *o.out;
  } else if (multi) {
    out = ".";
  } else {
    out = fs::path(o.script).stem();
    out += "." + o.format;
  }
  write_images(result.frames, config.canvas, o.format, out, multi);
  return result.diagnostics.empty() ? kExitClean : kExitDiagnostics;
}

int cmd_check(const std::string& script, bool json) {
  const std::string source = read_file(script);
  ParseResult parsed = parse_program(source);
  if (json) {
    std::cout << diagnostics_to_json(parsed.diagnostics) << '\n';
  } else {
    print_diagnostics(parsed.diagnostics, source, std::cout);
  }
  return parsed.diagnostics.empty() ? kExitClean : kExitDiagnostics;
}

int cmd_render(const std::string& input, const std::optional<std::string>& out_flag,
               const std::string& format) {
  DrawList list;
  try {
    list = parse_drawlist(read_file(input));
  } catch (const DrawListError& e) {
    throw UsageError{fmt::format("'{}' is not a valid draw list: {}", input, e.what())};
  }
  const bool multi = list.frames.size() > 1;
  fs::path out;
  if (out_flag) {
    out = *out_flag;
  } else if (multi) {
    out = ".";
  } else {
    out = fs::path(input).stem();
    out += "." + format;
  }
  write_images(list.frames, list.canvas, format, out, multi);
  return kExitClean;
}

int cmd_serve(int port, bool stdio, const std::optional<std::string>& seed_flag) {
  const std::uint64_t seed = resolve_seed(seed_flag);
  if (stdio) {
    serve_stream(std::cin, std::cout, seed);
    return kExitClean;
  }
  Server server(seed);
  const int bound = server.listen(port);
  std::cerr << "listening on 127.0.0.1:" << bound << std::endl;
  server.run();
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Runs drawing programs and turns them into pictures."};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run a script and save its picture(s).");
  run_cmd->add_option("script", run.script, "Script file")->required();
  run_cmd->add_option("--out", run.out, "Output file, or directory when --frames > 1");
  run_cmd->add_option("--frames", run.frames, "Number of frames to run")
      ->check(CLI::Range(1, 100000));
  run_cmd->add_option("--seed", run.seed, "Random seed (default: $BRUSH_SEED or 0)");
  run_cmd->add_option("--size", run.size, "Canvas size as WxH (default 800x600)");
  run_cmd->add_option("--format", run.format, "png or svg")
      ->check(CLI::IsMember({"png", "svg"}));
  run_cmd->add_option("--dump-drawlist", run.dump_drawlist, "Also write the draw list as JSON");

  std::string check_script;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "Check a script for mistakes without running it.");
  check_cmd->add_option("script", check_script, "Script file")->required();
  check_cmd->add_flag("--json", check_json, "Print diagnostics as JSON");

  std::string render_input;
  std::optional<std::string> render_out;
  std::string render_format = "png";
  auto* render_cmd = app.add_subcommand("render", "Draw a saved draw-list JSON file.");
  render_cmd->add_option("drawlist", render_input, "Draw-list JSON file")->required();
  render_cmd->add_option("--out", render_out, "Output file, or directory for several frames");
  render_cmd->add_option("--format", render_format, "png or svg")
      ->check(CLI::IsMember({"png", "svg"}));

  int port = 7878;
  bool stdio = false;
  std::optional<std::string> serve_seed;
  auto* serve_cmd = app.add_subcommand("serve", "Answer run requests as newline-delimited JSON.");
  serve_cmd->add_option("--port", port, "TCP port on 127.0.0.1 (0 picks one)")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_flag("--stdio", stdio, "Read requests from stdin instead of a socket");
  serve_cmd->add_option("--seed", serve_seed, "Default seed (default: $BRUSH_SEED or 0)");

  auto* manifest_cmd = app.add_subcommand("manifest", "Print the builtin function reference as JSON.");
  auto* catalog_cmd = app.add_subcommand("catalog", "Print the diagnostic catalog as JSON.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*check_cmd) return cmd_check(check_script, check_json);
    if (*render_cmd) return cmd_render(render_input, render_out, render_format);
    if (*serve_cmd) return cmd_serve(port, stdio, serve_seed);
    if (*manifest_cmd) {
      std::cout << manifest_json() << '\n';
      return kExitClean;
    }
    if (*catalog_cmd) {
      std::cout << catalog_json() << '\n';
      return kExitClean;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
