#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "brush/canvas.hpp"
#include "brush/color.hpp"
#include "brush/draw_command.hpp"
#include "brush/geometry.hpp"

namespace brush {

/// Row-major RGBA8 pixels.
class FrameBuffer {
 public:
  FrameBuffer(int width, int height, Rgba fill = kWhite);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const std::uint8_t> bytes() const { return pixels_; }

  Rgba at(int x, int y) const;
  void set(int x, int y, Rgba c);
  /// Paint pixels [x0, x1) of row y; the range must already be clipped.
  void fill_span(int y, int x0, int x1, Rgba c);

  bool operator==(const FrameBuffer&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

/// Paint every command in order onto `fb`. Clear commands use `background`.
void rasterize(const DisplayList& list, FrameBuffer& fb, Rgba background = kWhite);

/// Even-odd scanline fill sampled at pixel centers.
void fill_polygon(std::span<const Point> vertices, FrameBuffer& fb, Rgba c);

/// Pixels whose centers fall in [x, x+w) x [y, y+h).
void fill_rect(double x, double y, double w, double h, FrameBuffer& fb, Rgba c);

/// Rasterize frames onto one framebuffer (the canvas is never cleared
/// between frames) and hand the picture after each frame to `sink`.
void render_frames(std::span<const DisplayList> frames, const CanvasConfig& canvas,
                   const std::function<void(std::size_t, const FrameBuffer&)>& sink);

}  // namespace brush
