#pragma once

#include <cstddef>
#include <string>

#include "lcode/code.hpp"

namespace lcode {

/// Appends p zero columns on the right, then the all-one row of length n+p as the last row.
/// Throws Error when the all-one word already lies in the padded code (only possible for p == 0).
LinearCode extend_all_one(const LinearCode& code, std::size_t p);

/// min(d, n + p - d_max); requires 1 <= d <= d_max <= n.
long predicted_min_distance(long d, long d_max, long n, long p);

/// Expected distribution of the extension: A_w + A_{n+p-w}.
WeightDistribution extended_distribution(const WeightDistribution& base, std::size_t p);

struct ExtensionReport {
  LinearCode base;
  LinearCode extended;
  std::size_t p = 0;
  WeightDistribution base_distribution;
  WeightDistribution extended_distribution;
  std::size_t base_d = 0;
  std::size_t base_d_max = 0;
  long predicted_d = 0;
  std::size_t verified_d = 0;
  /// Every coefficient of the enumerated extension equals A_w + A_{n+p-w}.
  bool coefficient_identity = false;

  bool prediction_holds() const { return coefficient_identity && predicted_d == static_cast<long>(verified_d); }
};

/// Builds the extension and verifies the predicted distance and coefficients by enumeration.
ExtensionReport extension_report(const LinearCode& code, std::size_t p);

std::string format_report(const ExtensionReport& report);

}  // namespace lcode
