#include <doctest.h>

#include "lcode/fixtures.hpp"
#include "lcode/mat_format.hpp"

using namespace lcode;

namespace {

// Matrix digits only, one row per line, so the checksum ignores comments.
std::string digits(const BitMatrix& m) { return format_mat(m); }

}  // namespace

TEST_CASE("embedded fixtures equal the shipped data files") {
  CHECK(embedded_gamma47_text() == read_text_file(LCODE_DATA_DIR "/gamma47.mat"));
  CHECK(embedded_m15_text() == read_text_file(LCODE_DATA_DIR "/m15.mat"));
}

TEST_CASE("fixture transcription checksums") {
  const auto& f = embedded_fixtures();
  CHECK(f.gamma47.rows() == 15);
  CHECK(f.gamma47.cols() == 47);
  CHECK(f.m15.rows() == 15);
  CHECK(f.m15.cols() == 15);
  CHECK(fnv1a64(digits(f.gamma47)) == 0x06281bb4a1f9da13ULL);
  CHECK(fnv1a64(digits(f.m15)) == 0xe633f6eb3408b8d3ULL);
  CHECK(f.gamma47.row(0).to_string() == "00000111110000011111000001111100011000110100000");
  CHECK(f.gamma47.row(14).to_string() == "01110110110000101001110000101100101101110101010");
  CHECK(f.m15.row(0).to_string() == "101001010011111");
  CHECK(f.m15.row(14).to_string() == "111011000010001");
}

TEST_CASE("fixture invariants") {
  const auto& f = embedded_fixtures();
  CHECK(rank(f.gamma47) == 15);
  CHECK(rank(f.m15) == 15);
  CHECK(f.gamma47_distribution.total() == 32768);
  CHECK(f.extended48_distribution.total() == 65536);
}

TEST_CASE("verify_fixtures passes on the embedded fixtures") {
  const auto outcome = verify_fixtures(embedded_fixtures());
  CHECK(outcome.passed());
  REQUIRE(outcome.checks.size() == 5);
  for (const auto& c : outcome.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("verify_fixtures detects tampering") {
  SUBCASE("one flipped bit in the generator") {
    auto f = embedded_fixtures();
    f.gamma47.set(3, 10, !f.gamma47.get(3, 10));
    const auto outcome = verify_fixtures(f);
    CHECK_FALSE(outcome.passed());
    CHECK_FALSE(outcome.checks[2].passed);
    CHECK(outcome.checks[0].passed);
  }
  SUBCASE("identity group generator") {
    auto f = embedded_fixtures();
    f.m15 = BitMatrix::identity(15);
    const auto outcome = verify_fixtures(f);
    CHECK_FALSE(outcome.passed());
    CHECK_FALSE(outcome.checks[0].passed);
    CHECK_FALSE(outcome.checks[1].passed);
    CHECK(outcome.checks[1].detail.find("direct=32767") != std::string::npos);
    CHECK(outcome.checks[2].passed);
  }
}
