#include "brush/color.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>

#include "brush/diagnostics.hpp"

namespace brush {

namespace {

constexpr std::array<NamedColor, 148> kNamed = {{
    {"aliceblue", {0xF0, 0xF8, 0xFF, 255}},
    {"antiquewhite", {0xFA, 0xEB, 0xD7, 255}},
    {"aqua", {0x00, 0xFF, 0xFF, 255}},
    {"aquamarine", {0x7F, 0xFF, 0xD4, 255}},
    {"azure", {0xF0, 0xFF, 0xFF, 255}},
    {"beige", {0xF5, 0xF5, 0xDC, 255}},
    {"bisque", {0xFF, 0xE4, 0xC4, 255}},
    {"black", {0x00, 0x00, 0x00, 255}},
    {"blanchedalmond", {0xFF, 0xEB, 0xCD, 255}},
    {"blue", {0x00, 0x00, 0xFF, 255}},
    {"blueviolet", {0x8A, 0x2B, 0xE2, 255}},
    {"brown", {0xA5, 0x2A, 0x2A, 255}},
    {"burlywood", {0xDE, 0xB8, 0x87, 255}},
    {"cadetblue", {0x5F, 0x9E, 0xA0, 255}},
    {"chartreuse", {0x7F, 0xFF, 0x00, 255}},
    {"chocolate", {0xD2, 0x69, 0x1E, 255}},
    {"coral", {0xFF, 0x7F, 0x50, 255}},
    {"cornflowerblue", {0x64, 0x95, 0xED, 255}},
    {"cornsilk", {0xFF, 0xF8, 0xDC, 255}},
    {"crimson", {0xDC, 0x14, 0x3C, 255}},
    {"cyan", {0x00, 0xFF, 0xFF, 255}},
    {"darkblue", {0x00, 0x00, 0x8B, 255}},
    {"darkcyan", {0x00, 0x8B, 0x8B, 255}},
    {"darkgoldenrod", {0xB8, 0x86, 0x0B, 255}},
    {"darkgray", {0xA9, 0xA9, 0xA9, 255}},
    {"darkgreen", {0x00, 0x64, 0x00, 255}},
    {"darkgrey", {0xA9, 0xA9, 0xA9, 255}},
    {"darkkhaki", {0xBD, 0xB7, 0x6B, 255}},
    {"darkmagenta", {0x8B, 0x00, 0x8B, 255}},
    {"darkolivegreen", {0x55, 0x6B, 0x2F, 255}},
    {"darkorange", {0xFF, 0x8C, 0x00, 255}},
    {"darkorchid", {0x99, 0x32, 0xCC, 255}},
    {"darkred", {0x8B, 0x00, 0x00, 255}},
    {"darksalmon", {0xE9, 0x96, 0x7A, 255}},
    {"darkseagreen", {0x8F, 0xBC, 0x8F, 255}},
    {"darkslateblue", {0x48, 0x3D, 0x8B, 255}},
    {"darkslategray", {0x2F, 0x4F, 0x4F, 255}},
    {"darkslategrey", {0x2F, 0x4F, 0x4F, 255}},
    {"darkturquoise", {0x00, 0xCE, 0xD1, 255}},
    {"darkviolet", {0x94, 0x00, 0xD3, 255}},
    {"deeppink", {0xFF, 0x14, 0x93, 255}},
    {"deepskyblue", {0x00, 0xBF, 0xFF, 255}},
    {"dimgray", {0x69, 0x69, 0x69, 255}},
    {"dimgrey", {0x69, 0x69, 0x69, 255}},
    {"dodgerblue", {0x1E, 0x90, 0xFF, 255}},
    {"firebrick", {0xB2, 0x22, 0x22, 255}},
    {"floralwhite", {0xFF, 0xFA, 0xF0, 255}},
    {"forestgreen", {0x22, 0x8B, 0x22, 255}},
    {"fuchsia", {0xFF, 0x00, 0xFF, 255}},
    {"gainsboro", {0xDC, 0xDC, 0xDC, 255}},
    {"ghostwhite", {0xF8, 0xF8, 0xFF, 255}},
    {"gold", {0xFF, 0xD7, 0x00, 255}},
    {"goldenrod", {0xDA, 0xA5, 0x20, 255}},
    {"gray", {0x80, 0x80, 0x80, 255}},
    {"green", {0x00, 0x80, 0x00, 255}},
    {"greenyellow", {0xAD, 0xFF, 0x2F, 255}},
    {"grey", {0x80, 0x80, 0x80, 255}},
    {"honeydew", {0xF0, 0xFF, 0xF0, 255}},
    {"hotpink", {0xFF, 0x69, 0xB4, 255}},
    {"indianred", {0xCD, 0x5C, 0x5C, 255}},
    {"indigo", {0x4B, 0x00, 0x82, 255}},
    {"ivory", {0xFF, 0xFF, 0xF0, 255}},
    {"khaki", {0xF0, 0xE6, 0x8C, 255}},
    {"lavender", {0xE6, 0xE6, 0xFA, 255}},
    {"lavenderblush", {0xFF, 0xF0, 0xF5, 255}},
    {"lawngreen", {0x7C, 0xFC, 0x00, 255}},
    {"lemonchiffon", {0xFF, 0xFA, 0xCD, 255}},
    {"lightblue", {0xAD, 0xD8, 0xE6, 255}},
    {"lightcoral", {0xF0, 0x80, 0x80, 255}},
    {"lightcyan", {0xE0, 0xFF, 0xFF, 255}},
    {"lightgoldenrodyellow", {0xFA, 0xFA, 0xD2, 255}},
    {"lightgray", {0xD3, 0xD3, 0xD3, 255}},
    {"lightgreen", {0x90, 0xEE, 0x90, 255}},
    {"lightgrey", {0xD3, 0xD3, 0xD3, 255}},
    {"lightpink", {0xFF, 0xB6, 0xC1, 255}},
    {"lightsalmon", {0xFF, 0xA0, 0x7A, 255}},
    {"lightseagreen", {0x20, 0xB2, 0xAA, 255}},
    {"lightskyblue", {0x87, 0xCE, 0xFA, 255}},
    {"lightslategray", {0x77, 0x88, 0x99, 255}},
    {"lightslategrey", {0x77, 0x88, 0x99, 255}},
    {"lightsteelblue", {0xB0, 0xC4, 0xDE, 255}},
    {"lightyellow", {0xFF, 0xFF, 0xE0, 255}},
    {"lime", {0x00, 0xFF, 0x00, 255}},
    {"limegreen", {0x32, 0xCD, 0x32, 255}},
    {"linen", {0xFA, 0xF0, 0xE6, 255}},
    {"magenta", {0xFF, 0x00, 0xFF, 255}},
    {"maroon", {0x80, 0x00, 0x00, 255}},
    {"mediumaquamarine", {0x66, 0xCD, 0xAA, 255}},
    {"mediumblue", {0x00, 0x00, 0xCD, 255}},
    {"mediumorchid", {0xBA, 0x55, 0xD3, 255}},
    {"mediumpurple", {0x93, 0x70, 0xDB, 255}},
    {"mediumseagreen", {0x3C, 0xB3, 0x71, 255}},
    {"mediumslateblue", {0x7B, 0x68, 0xEE, 255}},
    {"mediumspringgreen", {0x00, 0xFA, 0x9A, 255}},
    {"mediumturquoise", {0x48, 0xD1, 0xCC, 255}},
    {"mediumvioletred", {0xC7, 0x15, 0x85, 255}},
    {"midnightblue", {0x19, 0x19, 0x70, 255}},
    {"mintcream", {0xF5, 0xFF, 0xFA, 255}},
    {"mistyrose", {0xFF, 0xE4, 0xE1, 255}},
    {"moccasin", {0xFF, 0xE4, 0xB5, 255}},
    {"navajowhite", {0xFF, 0xDE, 0xAD, 255}},
    {"navy", {0x00, 0x00, 0x80, 255}},
    {"oldlace", {0xFD, 0xF5, 0xE6, 255}},
    {"olive", {0x80, 0x80, 0x00, 255}},
    {"olivedrab", {0x6B, 0x8E, 0x23, 255}},
    {"orange", {0xFF, 0xA5, 0x00, 255}},
    {"orangered", {0xFF, 0x45, 0x00, 255}},
    {"orchid", {0xDA, 0x70, 0xD6, 255}},
    {"palegoldenrod", {0xEE, 0xE8, 0xAA, 255}},
    {"palegreen", {0x98, 0xFB, 0x98, 255}},
    {"paleturquoise", {0xAF, 0xEE, 0xEE, 255}},
    {"palevioletred", {0xDB, 0x70, 0x93, 255}},
    {"papayawhip", {0xFF, 0xEF, 0xD5, 255}},
    {"peachpuff", {0xFF, 0xDA, 0xB9, 255}},
    {"peru", {0xCD, 0x85, 0x3F, 255}},
    {"pink", {0xFF, 0xC0, 0xCB, 255}},
    {"plum", {0xDD, 0xA0, 0xDD, 255}},
    {"powderblue", {0xB0, 0xE0, 0xE6, 255}},
    {"purple", {0x80, 0x00, 0x80, 255}},
    {"rebeccapurple", {0x66, 0x33, 0x99, 255}},
    {"red", {0xFF, 0x00, 0x00, 255}},
    {"rosybrown", {0xBC, 0x8F, 0x8F, 255}},
    {"royalblue", {0x41, 0x69, 0xE1, 255}},
    {"saddlebrown", {0x8B, 0x45, 0x13, 255}},
    {"salmon", {0xFA, 0x80, 0x72, 255}},
    {"sandybrown", {0xF4, 0xA4, 0x60, 255}},
    {"seagreen", {0x2E, 0x8B, 0x57, 255}},
    {"seashell", {0xFF, 0xF5, 0xEE, 255}},
    {"sienna", {0xA0, 0x52, 0x2D, 255}},
    {"silver", {0xC0, 0xC0, 0xC0, 255}},
    {"skyblue", {0x87, 0xCE, 0xEB, 255}},
    {"slateblue", {0x6A, 0x5A, 0xCD, 255}},
    {"slategray", {0x70, 0x80, 0x90, 255}},
    {"slategrey", {0x70, 0x80, 0x90, 255}},
    {"snow", {0xFF, 0xFA, 0xFA, 255}},
    {"springgreen", {0x00, 0xFF, 0x7F, 255}},
    {"steelblue", {0x46, 0x82, 0xB4, 255}},
    {"tan", {0xD2, 0xB4, 0x8C, 255}},
    {"teal", {0x00, 0x80, 0x80, 255}},
    {"thistle", {0xD8, 0xBF, 0xD8, 255}},
    {"tomato", {0xFF, 0x63, 0x47, 255}},
    {"turquoise", {0x40, 0xE0, 0xD0, 255}},
    {"violet", {0xEE, 0x82, 0xEE, 255}},
    {"wheat", {0xF5, 0xDE, 0xB3, 255}},
    {"white", {0xFF, 0xFF, 0xFF, 255}},
    {"whitesmoke", {0xF5, 0xF5, 0xF5, 255}},
    {"yellow", {0xFF, 0xFF, 0x00, 255}},
    {"yellowgreen", {0x9A, 0xCD, 0x32, 255}},
}};

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::span<const NamedColor> named_colors() { return kNamed; }

std::optional<Rgba> try_parse_color(std::string_view text) {
  if (!text.empty() && text.front() == '#') {
    const auto digits = text.substr(1);
    if (digits.size() != 3 && digits.size() != 6) return std::nullopt;
    std::array<int, 6> v{};
    for (std::size_t i = 0; i < digits.size(); ++i) {
      v[i] = hex_digit(digits[i]);
      if (v[i] < 0) return std::nullopt;
    }
    if (digits.size() == 3) {
      return Rgba{static_cast<std::uint8_t>(v[0] * 17), static_cast<std::uint8_t>(v[1] * 17),
                  static_cast<std::uint8_t>(v[2] * 17), 255};
    }
    return Rgba{static_cast<std::uint8_t>(v[0] * 16 + v[1]),
                static_cast<std::uint8_t>(v[2] * 16 + v[3]),
                static_cast<std::uint8_t>(v[4] * 16 + v[5]), 255};
  }
  const std::string key = lower(text);
  auto it = std::lower_bound(kNamed.begin(), kNamed.end(), key,
                             [](const NamedColor& c, const std::string& k) { return c.name < k; });
  if (it != kNamed.end() && it->name == key) return it->rgba;
  return std::nullopt;
}

Rgba parse_color(std::string_view text) {
  if (auto c = try_parse_color(text)) return *c;
  const auto names = closest_color_names(text);
  std::string hint = "Did you mean ";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) hint += i + 1 == names.size() ? " or " : ", ";
    hint += "'" + names[i] + "'";
  }
  hint += "?";
  raise(DiagCode::UnknownColor, {std::string(text)}, hint);
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::vector<std::string> closest_color_names(std::string_view text, std::size_t count) {
  const std::string key = lower(text);
  std::vector<std::pair<std::size_t, std::string_view>> scored;
  scored.reserve(kNamed.size());
  for (const auto& c : kNamed) scored.emplace_back(edit_distance(key, c.name), c.name);
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(count, scored.size()); ++i)
    out.emplace_back(scored[i].second);
  return out;
}

std::string to_hex(Rgba c) { return fmt::format("#{:02X}{:02X}{:02X}", c.r, c.g, c.b); }

}  // namespace brush
