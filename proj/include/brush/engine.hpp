#pragma once

#include <string_view>
#include <vector>

#include "brush/diagnostics.hpp"
#include "brush/draw_command.hpp"
#include "brush/interpreter.hpp"

namespace brush {

inline constexpr std::string_view kEngineVersion = "1.0.0";

struct ScriptResult {
  /// Empty when the program did not parse.
  std::vector<DisplayList> frames;
  std::vector<Diagnostic> diagnostics;
  bool parsed = false;
  std::uint64_t steps_used = 0;

  bool ok() const;
};

/// Parse and run in one go. Syntax errors stop before anything runs.
ScriptResult run_script(std::string_view source, const RunConfig& config = {});

}  // namespace brush
