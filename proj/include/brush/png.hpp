#pragma once

#include <cstdint>
#include <vector>

#include "brush/raster.hpp"

namespace brush {

/// 8-bit RGBA, no interlacing, filter 0 on every row, zlib level 6. The
/// same framebuffer always gives the same bytes.
std::vector<std::uint8_t> encode_png(const FrameBuffer& fb);

}  // namespace brush
