#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace brush {

/// Upper bound on frames one request may ask for.
inline constexpr int kMaxRequestFrames = 600;
/// Longest request line accepted by the server, in bytes.
inline constexpr std::size_t kMaxRequestBytes = 1 << 20;

/// Answer one newline-delimited JSON request with one JSON line (no
/// trailing newline). Never throws: malformed input gets status "error".
///
/// Request:  {"id"?, "source", "seed"?, "frames"?, "canvas"?: {"width","height"},
///            "output"?: "drawlist" | "png"}
/// Response: {"id", "status", "seed", "engine_version", "version", "canvas",
///            "diagnostics", "frames", "error"?}
std::string handle_request(std::string_view line, std::uint64_t default_seed = 0);

/// Response for a request that could not be read at all.
std::string error_response(std::string_view message);

std::string base64_encode(const void* data, std::size_t size);

}  // namespace brush
