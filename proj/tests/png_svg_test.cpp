#include <doctest.h>

#include "brush/png.hpp"
#include "brush/raster.hpp"
#include "brush/svg.hpp"
#include "support.hpp"

using namespace brush;

TEST_SUITE("png") {

TEST_CASE("libpng reads back the exact pixels") {
  FrameBuffer fb(37, 11);
  for (int y = 0; y < fb.height(); ++y)
    for (int x = 0; x < fb.width(); ++x)
      fb.set(x, y, Rgba{std::uint8_t(x * 7), std::uint8_t(y * 23), std::uint8_t(x ^ y), 255});
  const auto bytes = encode_png(fb);
  const auto img = testing::decode_png(bytes);
  CHECK(img.width == 37);
  CHECK(img.height == 11);
  CHECK(std::equal(img.rgba.begin(), img.rgba.end(), fb.bytes().begin(), fb.bytes().end()));
}

TEST_CASE("header layout") {
  const auto bytes = encode_png(FrameBuffer(3, 2));
  const std::uint8_t sig[] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  REQUIRE(bytes.size() > 33);
  CHECK(std::equal(std::begin(sig), std::end(sig), bytes.begin()));
  CHECK(std::string(bytes.begin() + 12, bytes.begin() + 16) == "IHDR");
  CHECK(bytes[19] == 3);  // width, big endian
  CHECK(bytes[23] == 2);
  CHECK(bytes[24] == 8);  // bit depth
  CHECK(bytes[25] == 6);  // RGBA
  CHECK(std::string(bytes.end() - 8, bytes.end() - 4) == "IEND");
}

TEST_CASE("same pixels give the same bytes") {
  FrameBuffer a(64, 64), b(64, 64);
  rasterize({{shape::Circle{32, 32, 20}, Rgba{1, 2, 3, 255}}}, a);
  rasterize({{shape::Circle{32, 32, 20}, Rgba{1, 2, 3, 255}}}, b);
  CHECK(encode_png(a) == encode_png(b));
}

}

TEST_SUITE("svg") {

TEST_CASE("one element per command after the background") {
  const DisplayList list = {
      {shape::Circle{10, 20, 5}, Rgba{255, 0, 0, 255}},
      {shape::Rect{1, 2, 3, 4}, Rgba{0, 255, 0, 255}},
      {shape::RegularPolygon{50, 50, 10, 6}, Rgba{0, 0, 255, 255}},
      {shape::Semicircle{30, 30, 5}, Rgba{0, 0, 0, 255}},
      {shape::Oval{40, 40, 10, 5, 0.5}, Rgba{0, 0, 0, 255}},
      {shape::Line{{0, 0}, {5, 5}}, Rgba{0, 0, 0, 255}},
      {shape::Curve{{0, 0}, {5, 9}, {9, 0}}, Rgba{0, 0, 0, 255}},
      {shape::Text{5, 5, "a<b&\"c\""}, Rgba{0, 0, 0, 255}},
  };
  const std::string svg = export_svg(list, CanvasConfig{100, 80});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("width=\"100\"") != std::string::npos);
  CHECK(svg.find("<circle cx=\"10\" cy=\"20\" r=\"5\" fill=\"#FF0000\"") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<ellipse") != std::string::npos);
  CHECK(svg.find("rotate(") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(svg.find(" Q") != std::string::npos);
  CHECK(svg.find("a&lt;b&amp;&quot;c&quot;") != std::string::npos);
  CHECK(svg.find("a<b") == std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("numbers keep full precision") {
  const std::string svg = export_svg({{shape::Circle{0.1 + 0.2, 1, 1}, kWhite}});
  CHECK(svg.find("0.30000000000000004") != std::string::npos);
}

}
