#include <doctest.h>

#include <random>

#include "lcode/error.hpp"
#include "lcode/mat_format.hpp"
#include "support.hpp"

using namespace lcode;

TEST_CASE("parse_mat reads rows and skips comments") {
  const auto m = parse_mat("# a comment\n101\n\n011\r\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.get(0, 0));
  CHECK_FALSE(m.get(1, 0));
  CHECK(m.get(1, 2));
}

TEST_CASE("parse_mat diagnostics name line and column") {
  SUBCASE("ragged rows") {
    try {
      parse_mat("1111\n1111\n111\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()) == "row 3: expected 4 columns, found 3");
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("bad character") {
    try {
      parse_mat("# header\n10x1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
  }
  SUBCASE("empty input") { CHECK_THROWS_AS(parse_mat("# nothing\n"), ParseError); }
  SUBCASE("too wide") { CHECK_THROWS_AS(parse_mat(std::string(65, '1')), ParseError); }
}

TEST_CASE("format_mat round-trips") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto m = testing::random_matrix(rng, 1 + rng() % 16, 1 + rng() % 64);
    CHECK(parse_mat(format_mat(m, "random\nmatrix")) == m);
  }
}
