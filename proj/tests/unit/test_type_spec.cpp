#include "weyl/errors.hpp"
#include "weyl/type_spec.hpp"

#include <doctest.h>

using namespace weyl;

TEST_CASE("type specs parse case-insensitively and print canonically") {
  CHECK(TypeSpec::parse("e8").str() == "E8");
  CHECK(TypeSpec::parse("a1xd6").str() == "A1xD6");
  CHECK(TypeSpec::parse("A1XA2").str() == "A1xA2");
  CHECK(TypeSpec::parse("A1xD6").rank() == 7);
  CHECK(TypeSpec::parse("G2xB2xA1").factors().size() == 3);
}

TEST_CASE("factor order is kept") {
  CHECK(TypeSpec::parse("D6xA1").str() == "D6xA1");
  CHECK_FALSE(TypeSpec::parse("D6xA1") == TypeSpec::parse("A1xD6"));
}

TEST_CASE("illegal factors are usage errors naming the factor") {
  for (const char* bad : {"", "E9", "E5", "A0", "B0", "C0", "D1", "F3", "G3", "H3", "A", "A1x", "xA1", "A1xxA2",
                          "A-1", "A1.5", "B02x"}) {
    INFO(bad);
    CHECK_THROWS_AS(TypeSpec::parse(bad), UsageError);
  }
  try {
    TypeSpec::parse("A1xE9");
    FAIL("no exception");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("E9") != std::string::npos);
  }
}

TEST_CASE("legal ranks per family") {
  CHECK(check_factor({Family::B, 2}).empty());
  CHECK(check_factor({Family::C, 3}).empty());
  CHECK(check_factor({Family::D, 2}).empty());
  CHECK_FALSE(check_factor({Family::D, 1}).empty());
  CHECK(check_factor({Family::B, 1}).empty());
  CHECK(check_factor({Family::F, 4}).empty());
  CHECK_FALSE(check_factor({Family::F, 5}).empty());
}
