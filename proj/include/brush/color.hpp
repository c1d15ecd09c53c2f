#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brush {

struct Rgba {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  std::uint8_t a = 255;

  bool operator==(const Rgba&) const = default;
};

inline constexpr Rgba kWhite{255, 255, 255, 255};

struct NamedColor {
  std::string_view name;
  Rgba rgba;
};

/// The 148 CSS named colors, sorted by name.
std::span<const NamedColor> named_colors();

/// Accepts a CSS color name, `#RGB` or `#RRGGBB` (all case-insensitive).
std::optional<Rgba> try_parse_color(std::string_view text);

/// Like try_parse_color, but throws a ScriptError (unknown color) that
/// suggests the closest names.
Rgba parse_color(std::string_view text);

/// The `count` color names with the smallest edit distance to `text`,
/// ties broken alphabetically.
std::vector<std::string> closest_color_names(std::string_view text, std::size_t count = 3);

/// `#RRGGBB`, uppercase.
std::string to_hex(Rgba c);

std::size_t edit_distance(std::string_view a, std::string_view b);

}  // namespace brush
