#include <doctest.h>

#include "brush/color.hpp"
#include "brush/diagnostics.hpp"
#include "brush/rng.hpp"

using namespace brush;

TEST_SUITE("color") {

TEST_CASE("names and hex forms") {
  CHECK(try_parse_color("red") == Rgba{255, 0, 0, 255});
  CHECK(try_parse_color("Red") == Rgba{255, 0, 0, 255});
  CHECK(try_parse_color("rebeccapurple") == Rgba{102, 51, 153, 255});
  CHECK(try_parse_color("#1a2B3c") == Rgba{0x1A, 0x2B, 0x3C, 255});
  CHECK(try_parse_color("#abc") == Rgba{0xAA, 0xBB, 0xCC, 255});
  CHECK_FALSE(try_parse_color("#abcd"));
  CHECK_FALSE(try_parse_color("#ggg"));
  CHECK_FALSE(try_parse_color(""));
  CHECK_FALSE(try_parse_color("rgb(1,2,3)"));
}

TEST_CASE("the full CSS name table") {
  const auto names = named_colors();
  CHECK(names.size() == 148);
  for (std::size_t i = 1; i < names.size(); ++i) CHECK(names[i - 1].name < names[i].name);
  CHECK(try_parse_color("grey") == try_parse_color("gray"));
}

TEST_CASE("to_hex") {
  CHECK(to_hex(Rgba{0xBD, 0xD7, 0x32, 255}) == "#BDD732");
  CHECK(to_hex(*try_parse_color("white")) == "#FFFFFF");
}

TEST_CASE("closest names") {
  CHECK(closest_color_names("rde") == std::vector<std::string>{"red", "blue", "gray"});
  CHECK(closest_color_names("bleu") == std::vector<std::string>{"blue", "black", "grey"});
  CHECK(closest_color_names("gren") == std::vector<std::string>{"green", "grey", "gray"});
  CHECK(closest_color_names("purpel") == std::vector<std::string>{"purple", "azure", "coral"});
  CHECK(closest_color_names("yelow") == std::vector<std::string>{"yellow", "snow", "beige"});
}

TEST_CASE("edit distance") {
  CHECK(edit_distance("kitten", "sitting") == 3);
  CHECK(edit_distance("", "abc") == 3);
  CHECK(edit_distance("same", "same") == 0);
}

TEST_CASE("unknown colors raise with suggestions") {
  try {
    parse_color("rde");
    FAIL("expected an error");
  } catch (const ScriptError& e) {
    CHECK(e.diagnostic().code == "E111");
    REQUIRE(e.diagnostic().hint);
    CHECK(e.diagnostic().hint->find("red") != std::string::npos);
  }
}

}

TEST_SUITE("rng") {

TEST_CASE("splitmix64 reference outputs for seed 0") {
  SplitMix64 r(0);
  CHECK(r.next() == 0xE220A8397B1DCDAFull);
  CHECK(r.next() == 0x6E789E6AA1B965F4ull);
  CHECK(r.next() == 0x06C45D188009454Full);
  CHECK(r.next() == 0xF88BB8A8724C81ECull);
  CHECK(r.next() == 0x1B39896A51A8749Bull);
  CHECK(r.draws() == 5);
}

TEST_CASE("splitmix64 reference outputs for seed 1234567") {
  SplitMix64 r(1234567);
  CHECK(r.next() == 0x599ED017FB08FC85ull);
  CHECK(r.next() == 0x2C73F08458540FA5ull);
  CHECK(r.next() == 0x883EBCE5A3F27C77ull);
}

TEST_CASE("unit doubles") {
  SplitMix64 r(0);
  CHECK(r.next_unit() == 0.8833108082136426);
  CHECK(r.next_unit() == 0.43152799704850997);
  CHECK(r.next_unit() == 0.026433771592597743);
  SplitMix64 s(99);
  for (int i = 0; i < 10000; ++i) {
    const double u = s.next_unit();
    REQUIRE(u >= 0);
    REQUIRE(u < 1);
  }
}

}
