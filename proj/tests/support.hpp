#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brush/draw_command.hpp"
#include "brush/raster.hpp"

namespace brush::testing {

std::filesystem::path source_dir();
std::filesystem::path fixture_path(std::string_view relative);
std::string read_text(const std::filesystem::path& path);
std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);

/// One row of a fixture manifest: file name plus expected CODE@line:col.
struct Expected {
  std::string code;
  int line = 0;
  int col = 0;
};
struct FixtureCase {
  std::string file;
  std::vector<Expected> expected;
};
std::vector<FixtureCase> load_expectations(const std::filesystem::path& tsv);

/// Decoded with libpng, independent of the encoder under test.
struct DecodedPng {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgba;
};
DecodedPng decode_png(std::span<const std::uint8_t> bytes);

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};
/// Run the built CLI with `args`, feeding `input` on stdin.
CommandResult run_cli(const std::vector<std::string>& args, std::string_view input = {},
                      const std::vector<std::string>& env = {});

/// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(std::string_view tag);

std::size_t count_pixels(const FrameBuffer& fb, Rgba c);

}  // namespace brush::testing
