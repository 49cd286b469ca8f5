#pragma once

// The [47,15,16] generator matrix and the order-10 group generator, embedded
// from data/gamma47.mat and data/m15.mat, with their published enumerators.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcode/code.hpp"
#include "lcode/gf2.hpp"

namespace lcode {

struct FixtureSet {
  BitMatrix gamma47;  // 15 x 47
  BitMatrix m15;      // 15 x 15
  WeightDistribution gamma47_distribution;    // [47,15] code
  WeightDistribution extended48_distribution;  // [48,16] extension with one zero column
  std::uint64_t group_order = 10;
  std::uint64_t orbit_count = 3383;
  std::size_t touched_orbits = 7;
};

/// The embedded fixtures.
const FixtureSet& embedded_fixtures();

std::string_view embedded_gamma47_text();
std::string_view embedded_m15_text();

/// Builds a distribution of length n from (weight, count) pairs; all other entries zero.
WeightDistribution make_distribution(std::size_t n, const std::vector<std::pair<std::size_t, std::uint64_t>>& terms);

/// 64-bit FNV-1a over the given bytes.
std::uint64_t fnv1a64(std::string_view bytes);

/// One line per check of the end-to-end reproduction.
struct VerifyCheck {
  std::string name;
  bool passed = false;
  bool informational = false;
  std::string detail;
};

struct VerifyOutcome {
  std::vector<VerifyCheck> checks;
  /// All non-informational checks passed.
  bool passed() const;
};

/// Group order, orbit counts (direct, Burnside, transpose), [47,15] analytics,
/// the [48,16,16] extension, and the column-orbit report (informational).
VerifyOutcome verify_fixtures(const FixtureSet& fixtures);

}  // namespace lcode
