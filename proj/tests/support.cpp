#include "support.hpp"

#include <png.h>
#include <sys/wait.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace brush::testing {

namespace fs = std::filesystem;

fs::path source_dir() { return BRUSH_SOURCE_DIR; }

fs::path fixture_path(std::string_view relative) {
  return source_dir() / "tests" / "fixtures" / relative;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  const std::string s = read_text(path);
  return {s.begin(), s.end()};
}

std::vector<FixtureCase> load_expectations(const fs::path& tsv) {
  std::vector<FixtureCase> out;
  std::istringstream in(read_text(tsv));
  std::string row;
  while (std::getline(in, row)) {
    if (row.empty() || row[0] == '#') continue;
    const auto tab = row.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("bad manifest row: " + row);
    FixtureCase c{row.substr(0, tab), {}};
    std::istringstream items(row.substr(tab + 1));
    std::string item;
    while (std::getline(items, item, ',')) {
      Expected e;
      const auto at = item.find('@');
      const auto colon = item.find(':', at);
      e.code = item.substr(0, at);
      e.line = std::stoi(item.substr(at + 1, colon - at - 1));
      e.col = std::stoi(item.substr(colon + 1));
      c.expected.push_back(e);
    }
    out.push_back(std::move(c));
  }
  return out;
}

DecodedPng decode_png(std::span<const std::uint8_t> bytes) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size()))
    throw std::runtime_error(std::string("libpng: ") + image.message);
  image.format = PNG_FORMAT_RGBA;
  DecodedPng out;
  out.width = static_cast<int>(image.width);
  out.height = static_cast<int>(image.height);
  out.rgba.resize(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, out.rgba.data(), 0, nullptr)) {
    png_image_free(&image);
    throw std::runtime_error(std::string("libpng: ") + image.message);
  }
  return out;
}

namespace {

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'')
      q += "'\\''";
    else
      q += c;
  }
  return q + "'";
}

}  // namespace

fs::path temp_dir(std::string_view tag) {
  static std::atomic<int> counter{0};
  const fs::path dir = fs::temp_directory_path() /
                       ("brush-test-" + std::to_string(::getpid()) + "-" + std::string(tag) + "-" +
                        std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

CommandResult run_cli(const std::vector<std::string>& args, std::string_view input,
                      const std::vector<std::string>& env) {
  const fs::path dir = temp_dir("cli");
  {
    std::ofstream in(dir / "stdin", std::ios::binary);
    in.write(input.data(), static_cast<std::streamsize>(input.size()));
  }
  std::string cmd = "env -u BRUSH_SEED";
  for (const auto& e : env) cmd += " " + quote(e);
  cmd += " " + quote(BRUSH_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " <" + quote((dir / "stdin").string()) + " >" + quote((dir / "stdout").string()) + " 2>" +
         quote((dir / "stderr").string());
  const int status = std::system(cmd.c_str());
  CommandResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = read_text(dir / "stdout");
  r.err = read_text(dir / "stderr");
  fs::remove_all(dir);
  return r;
}

std::size_t count_pixels(const FrameBuffer& fb, Rgba c) {
  std::size_t n = 0;
  for (int y = 0; y < fb.height(); ++y)
    for (int x = 0; x < fb.width(); ++x)
      if (fb.at(x, y) == c) ++n;
  return n;
}

}  // namespace brush::testing
