#pragma once

// Small grammar fuzzer: random programs that parse and run cleanly.
// Every PRNG draw is followed by `draws++` so tests can compare the
// count against the interpreter's stream.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace brush::testing {

class ProgramGen {
 public:
  explicit ProgramGen(std::uint64_t seed) : rng_(seed) {}

  std::string program(int statements = 12);

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin() { return pick(2) == 0; }
  std::string name(const char* prefix) { return prefix + std::to_string(fresh_++); }
  std::string sep();
  std::string number();
  std::string readable();
  std::string expr(int depth);
  std::string cond(int depth);
  std::string color();
  std::string draw_call();
  std::string statement(int depth);
  std::string block(int depth);

  std::mt19937_64 rng_;
  int fresh_ = 0;
  // Names visible in the current block nesting.
  std::vector<std::vector<std::string>> readable_{{}};
  std::vector<std::vector<std::string>> writable_{{}};
  std::vector<std::pair<std::string, int>> functions_;
  bool in_function_ = false;
};

}  // namespace brush::testing
