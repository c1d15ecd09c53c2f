#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brush/canvas.hpp"
#include "brush/draw_command.hpp"

namespace brush {

inline constexpr int kDrawListVersion = 1;

struct DrawList {
  CanvasConfig canvas;
  std::vector<DisplayList> frames;
};

class DrawListError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json command_to_json(const DrawCommand& cmd);
nlohmann::ordered_json frame_to_json(const DisplayList& frame);

/// {"version":1,"canvas":{"width":..,"height":..},"frames":[[...], ...]}
std::string serialize_drawlist(std::span<const DisplayList> frames, const CanvasConfig& canvas);

/// Strict reader for the same schema. Throws DrawListError naming the first
/// problem it finds.
DrawList parse_drawlist(std::string_view text);

}  // namespace brush
