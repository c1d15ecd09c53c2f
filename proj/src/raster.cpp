#include "brush/raster.hpp"

#include <algorithm>
#include <cmath>

#include "brush/font8x8.hpp"

namespace brush {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Smallest p in [0, limit] whose center p + 0.5 is >= a; limit if none.
// The loops make the result exact for every double, not just most.
int first_center_at_or_after(double a, int limit) {
  if (!(a > 0.5)) return 0;
  if (a > limit - 0.5) return limit;
  int p = static_cast<int>(std::ceil(a - 0.5));
  p = std::clamp(p, 0, limit);
  while (p > 0 && (p - 1) + 0.5 >= a) --p;
  while (p < limit && p + 0.5 < a) ++p;
  return p;
}

// Inclusive pixel range whose centers can lie within [lo, hi].
void center_range(double lo, double hi, int limit, int& first, int& last) {
  first = 0;
  last = limit - 1;
  if (std::isfinite(lo)) first = std::max(first, static_cast<int>(std::clamp(std::floor(lo) - 1, -1.0, double(limit))));
  if (std::isfinite(hi)) last = std::min(last, static_cast<int>(std::clamp(std::ceil(hi) + 1, -1.0, double(limit))));
}

template <typename Inside>
void fill_region(double cx, double cy, double reach, FrameBuffer& fb, Rgba c, Inside inside) {
  int x0, x1, y0, y1;
  center_range(cx - reach, cx + reach, fb.width(), x0, x1);
  center_range(cy - reach, cy + reach, fb.height(), y0, y1);
  for (int py = y0; py <= y1; ++py) {
    const double dy = (py + 0.5) - cy;
    for (int px = x0; px <= x1; ++px)
      if (inside((px + 0.5) - cx, dy)) fb.set(px, py, c);
  }
}

void stroke(Point a, Point b, FrameBuffer& fb, Rgba c) {
  const auto quad = stroke_segment(a, b, kStrokeHalfWidth);
  if (!quad.empty()) fill_polygon(quad, fb, c);
}

char32_t next_code_point(const std::string& s, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char b0 = byte(i);
  int extra = 0;
  char32_t cp = b0;
  if (b0 >= 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else if (b0 >= 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if (b0 >= 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if (b0 >= 0x80) {
    ++i;
    return 0xFFFD;
  }
  ++i;
  for (int k = 0; k < extra && i < s.size() && (byte(i) & 0xC0) == 0x80; ++k, ++i)
    cp = (cp << 6) | (byte(i) & 0x3F);
  return cp;
}

void draw_text(const shape::Text& t, FrameBuffer& fb, Rgba c) {
  constexpr int kScale = 2;
  constexpr int kAdvance = 8 * kScale;
  constexpr int kAscent = 7 * kScale;
  const double top = t.y - kAscent;
  double left = t.x;
  for (std::size_t i = 0; i < t.text.size();) {
    const Glyph& g = glyph(next_code_point(t.text, i));
    if (left > fb.width()) break;
    for (int row = 0; row < 8; ++row)
      for (int col = 0; col < 8; ++col)
        if (g[row] >> col & 1)
          fill_rect(left + col * kScale, top + row * kScale, kScale, kScale, fb, c);
    left += kAdvance;
  }
}

}  // namespace

FrameBuffer::FrameBuffer(int width, int height, Rgba fill)
    : width_(width), height_(height),
      pixels_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 4) {
  for (std::size_t i = 0; i < pixels_.size(); i += 4) {
    pixels_[i] = fill.r;
    pixels_[i + 1] = fill.g;
    pixels_[i + 2] = fill.b;
    pixels_[i + 3] = fill.a;
  }
}

Rgba FrameBuffer::at(int x, int y) const {
  const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 4;
  return {pixels_[i], pixels_[i + 1], pixels_[i + 2], pixels_[i + 3]};
}

void FrameBuffer::set(int x, int y, Rgba c) {
  const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 4;
  pixels_[i] = c.r;
  pixels_[i + 1] = c.g;
  pixels_[i + 2] = c.b;
  pixels_[i + 3] = c.a;
}

void FrameBuffer::fill_span(int y, int x0, int x1, Rgba c) {
  for (int x = x0; x < x1; ++x) set(x, y, c);
}

void fill_rect(double x, double y, double w, double h, FrameBuffer& fb, Rgba c) {
  const int x0 = first_center_at_or_after(x, fb.width());
  const int x1 = first_center_at_or_after(x + w, fb.width());
  const int y0 = first_center_at_or_after(y, fb.height());
  const int y1 = first_center_at_or_after(y + h, fb.height());
  for (int py = y0; py < y1; ++py) fb.fill_span(py, x0, x1, c);
}

void fill_polygon(std::span<const Point> v, FrameBuffer& fb, Rgba c) {
  const std::size_t n = v.size();
  if (n < 3) return;
  double min_y = v[0].y, max_y = v[0].y;
  for (const auto& p : v) {
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  int y0, y1;
  center_range(min_y, max_y, fb.height(), y0, y1);

  std::vector<double> xs;
  xs.reserve(n);
  for (int py = y0; py <= y1; ++py) {
    const double yc = py + 0.5;
    xs.clear();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const double yi = v[i].y, yj = v[j].y;
      if ((yi > yc) != (yj > yc)) {
        const double x = (v[j].x - v[i].x) * (yc - yi) / (yj - yi) + v[i].x;
        if (!std::isnan(x)) xs.push_back(x);
      }
    }
    if (xs.empty()) continue;
    std::sort(xs.begin(), xs.end());
    // A center is inside iff an odd number of crossings lie strictly to its
    // right. Left of xs[0] that count is m; between xs[k] and xs[k+1] it is
    // m - k - 1.
    const std::size_t m = xs.size();
    if (m % 2 == 1) fb.fill_span(py, 0, first_center_at_or_after(xs[0], fb.width()), c);
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if ((m - k - 1) % 2 == 0) continue;
      fb.fill_span(py, first_center_at_or_after(xs[k], fb.width()),
                   first_center_at_or_after(xs[k + 1], fb.width()), c);
    }
  }
}

void rasterize(const DisplayList& list, FrameBuffer& fb, Rgba background) {
  for (const auto& cmd : list) {
    const Rgba c = cmd.color;
    std::visit(
        overloaded{
            [&](const shape::Circle& s) {
              const double r2 = s.r * s.r;
              fill_region(s.cx, s.cy, s.r, fb, c,
                          [&](double dx, double dy) { return dx * dx + dy * dy <= r2; });
            },
            [&](const shape::Rect& s) { fill_rect(s.x, s.y, s.w, s.h, fb, c); },
            [&](const shape::Square& s) { fill_rect(s.x, s.y, s.size, s.size, fb, c); },
            [&](const shape::Star&) { fill_polygon(outline(cmd.shape), fb, c); },
            [&](const shape::RegularPolygon&) { fill_polygon(outline(cmd.shape), fb, c); },
            [&](const shape::Triangle&) { fill_polygon(outline(cmd.shape), fb, c); },
            [&](const shape::Semicircle& s) {
              const double r2 = s.r * s.r;
              fill_region(s.cx, s.cy, s.r, fb, c, [&](double dx, double dy) {
                return dy >= 0 && dx * dx + dy * dy <= r2;
              });
            },
            [&](const shape::Oval& s) {
              const double cs = std::cos(s.rotation), sn = std::sin(s.rotation);
              const double rx2 = s.rx * s.rx, ry2 = s.ry * s.ry;
              fill_region(s.cx, s.cy, std::max(s.rx, s.ry), fb, c, [&](double dx, double dy) {
                const double x = dx * cs + dy * sn;
                const double y = -dx * sn + dy * cs;
                return x * x / rx2 + y * y / ry2 <= 1;
              });
            },
            [&](const shape::Line& s) { stroke(s.a, s.b, fb, c); },
            [&](const shape::Curve& s) {
              const auto pts = flatten_quadratic(s.a, s.control, s.b, kCurveSegments);
              for (std::size_t i = 0; i + 1 < pts.size(); ++i) stroke(pts[i], pts[i + 1], fb, c);
            },
            [&](const shape::Text& s) { draw_text(s, fb, c); },
            [&](const shape::Clear& s) { fill_rect(s.x, s.y, s.w, s.h, fb, background); },
        },
        cmd.shape);
  }
}

void render_frames(std::span<const DisplayList> frames, const CanvasConfig& canvas,
                   const std::function<void(std::size_t, const FrameBuffer&)>& sink) {
  FrameBuffer fb(canvas.width, canvas.height, canvas.background);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    rasterize(frames[i], fb, canvas.background);
    sink(i, fb);
  }
}

}  // namespace brush
