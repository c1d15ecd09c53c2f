#pragma once

#include <array>
#include <cstdint>

namespace brush {

/// One 8x8 glyph, one byte per row, bit 0 is the leftmost pixel.
using Glyph = std::array<std::uint8_t, 8>;

/// Glyph for printable ASCII (32..126); anything else gets a hollow box.
const Glyph& glyph(char32_t code_point);

}  // namespace brush
