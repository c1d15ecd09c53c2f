#include "brush/protocol.hpp"

#include <json.hpp>

#include "brush/drawlist_json.hpp"
#include "brush/engine.hpp"
#include "brush/png.hpp"
#include "brush/raster.hpp"

namespace brush {

namespace {

using json = nlohmann::ordered_json;

struct BadRequest {
  std::string message;
};

json base_response(const json& id, const json& seed) {
  json r;
  r["id"] = id;
  r["status"] = "ok";
  r["seed"] = seed;
  r["engine_version"] = kEngineVersion;
  r["version"] = kDrawListVersion;
  return r;
}

std::uint64_t read_seed(const json& v) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    const auto s = v.get<std::int64_t>();
    if (s >= 0) return static_cast<std::uint64_t>(s);
  }
  throw BadRequest{"\"seed\" must be a whole number from 0 to 18446744073709551615"};
}

int read_int(const json& v, const char* name, int lo, int hi) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw BadRequest{std::string("\"") + name + "\" must be a whole number"};
  const auto n = v.is_number_unsigned() ? static_cast<std::int64_t>(std::min<std::uint64_t>(
                                               v.get<std::uint64_t>(), INT64_MAX))
                                         : v.get<std::int64_t>();
  if (n < lo || n > hi)
    throw BadRequest{std::string("\"") + name + "\" must be from " + std::to_string(lo) + " to " +
                     std::to_string(hi)};
  return static_cast<int>(n);
}

std::string respond(std::string_view line, std::uint64_t default_seed) {
  json id = nullptr;
  json seed_echo = nullptr;
  try {
    json req;
    try {
      req = json::parse(line);
    } catch (const json::parse_error&) {
      throw BadRequest{"the request is not valid JSON"};
    }
    if (!req.is_object()) throw BadRequest{"the request must be a JSON object"};
    if (auto it = req.find("id"); it != req.end()) id = *it;

    std::uint64_t seed = default_seed;
    if (auto it = req.find("seed"); it != req.end() && !it->is_null()) {
      seed_echo = *it;
      seed = read_seed(*it);
    }
    seed_echo = seed;

    auto src = req.find("source");
    if (src == req.end() || !src->is_string()) throw BadRequest{"\"source\" must be a string"};

    RunConfig config;
    config.seed = seed;
    if (auto it = req.find("frames"); it != req.end() && !it->is_null())
      config.max_frames = read_int(*it, "frames", 1, kMaxRequestFrames);
    if (auto it = req.find("canvas"); it != req.end() && !it->is_null()) {
      if (!it->is_object()) throw BadRequest{"\"canvas\" must be an object"};
      if (auto w = it->find("width"); w != it->end())
        config.canvas.width = read_int(*w, "width", 1, kMaxCanvasSide);
      if (auto h = it->find("height"); h != it->end())
        config.canvas.height = read_int(*h, "height", 1, kMaxCanvasSide);
    }
    std::string output = "drawlist";
    if (auto it = req.find("output"); it != req.end() && !it->is_null()) {
      if (!it->is_string()) throw BadRequest{"\"output\" must be \"drawlist\" or \"png\""};
      output = it->get<std::string>();
      if (output != "drawlist" && output != "png")
        throw BadRequest{"\"output\" must be \"drawlist\" or \"png\""};
    }

    const std::string& source = src->get_ref<const std::string&>();
    ScriptResult result = run_script(source, config);

    json r = base_response(id, seed_echo);
    r["output"] = output;
    r["canvas"] = {{"width", config.canvas.width}, {"height", config.canvas.height}};
    r["diagnostics"] = json::parse(diagnostics_to_json(result.diagnostics));
    json frames = json::array();
    if (output == "drawlist") {
      for (const auto& f : result.frames) frames.push_back(frame_to_json(f));
    } else {
      render_frames(result.frames, config.canvas, [&](std::size_t, const FrameBuffer& fb) {
        const auto png = encode_png(fb);
        frames.push_back(base64_encode(png.data(), png.size()));
      });
    }
    r["frames"] = std::move(frames);
    return r.dump(-1, ' ', false, json::error_handler_t::replace);
  } catch (const BadRequest& e) {
    json r = base_response(id, seed_echo);
    r["status"] = "error";
    r["error"] = e.message;
    r["diagnostics"] = json::array();
    r["frames"] = json::array();
    return r.dump(-1, ' ', false, json::error_handler_t::replace);
  }
}

}  // namespace

std::string handle_request(std::string_view line, std::uint64_t default_seed) {
  try {
    return respond(line, default_seed);
  } catch (const std::exception& e) {
    json r = base_response(nullptr, nullptr);
    r["status"] = "error";
    r["error"] = std::string("internal error: ") + e.what();
    r["diagnostics"] = json::array();
    r["frames"] = json::array();
    return r.dump(-1, ' ', false, json::error_handler_t::replace);
  }
}

std::string error_response(std::string_view message) {
  json r = base_response(nullptr, nullptr);
  r["status"] = "error";
  r["error"] = message;
  r["diagnostics"] = json::array();
  r["frames"] = json::array();
  return r.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string base64_encode(const void* data, std::size_t size) {
  static constexpr char kAlphabet[] =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  const auto* p = static_cast<const unsigned char*>(data);
  std::string out;
  out.reserve((size + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < size; i += 3) {
    const unsigned v = p[i] << 16 | p[i + 1] << 8 | p[i + 2];
    out += kAlphabet[v >> 18 & 63];
    out += kAlphabet[v >> 12 & 63];
    out += kAlphabet[v >> 6 & 63];
    out += kAlphabet[v & 63];
  }
  if (i < size) {
    unsigned v = p[i] << 16;
    if (i + 1 < size) v |= p[i + 1] << 8;
    out += kAlphabet[v >> 18 & 63];
    out += kAlphabet[v >> 12 & 63];
    out += i + 1 < size ? kAlphabet[v >> 6 & 63] : '=';
    out += '=';
  }
  return out;
}

}  // namespace brush
