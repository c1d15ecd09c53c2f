#include "brush/engine.hpp"

#include <algorithm>

#include "brush/parser.hpp"

namespace brush {

bool ScriptResult::ok() const {
  return parsed && std::none_of(diagnostics.begin(), diagnostics.end(),
                                [](const Diagnostic& d) { return d.is_error(); });
}

ScriptResult run_script(std::string_view source, const RunConfig& config) {
  ScriptResult out;
  ParseResult parsed = parse_program(source);
  if (!parsed.ok()) {
    out.diagnostics = std::move(parsed.diagnostics);
    return out;
  }
  out.parsed = true;
  RunResult run = run_frames(*parsed.program, config);
  out.frames = std::move(run.frames);
  out.diagnostics = std::move(run.diagnostics);
  out.steps_used = run.steps_used;
  return out;
}

}  // namespace brush
