#include "lcode/extension.hpp"

#include <algorithm>
#include <sstream>

#include "lcode/error.hpp"

namespace lcode {

LinearCode extend_all_one(const LinearCode& code, std::size_t p) {
  const std::size_t n = code.length() + p;
  if (n > BitVector::kMaxLen) throw Error("extended length " + std::to_string(n) + " exceeds 64");
  BitMatrix gen = code.generator().with_zero_columns(p).with_row(BitVector::ones(n));
  if (rank(gen) != code.dimension() + 1) {
    throw Error("all-one word in code; dimension would not increase");
  }
  return LinearCode(std::move(gen));
}

long predicted_min_distance(long d, long d_max, long n, long p) {
  if (!(1 <= d && d <= d_max && d_max <= n) || p < 0) {
    throw Error("predicted_min_distance requires 1 <= d <= d_max <= n and p >= 0");
  }
  return std::min(d, n + p - d_max);
}

WeightDistribution extended_distribution(const WeightDistribution& base, std::size_t p) {
  const std::size_t n = base.n + p;
  WeightDistribution out(n);
  for (std::size_t w = 0; w <= n; ++w) out.counts[w] = base[w] + base[n - w];
  return out;
}

ExtensionReport extension_report(const LinearCode& code, std::size_t p) {
  if (code.dimension() + 1 > kMaxEnumerationDimension) {
    throw Error("enumeration too large: extended dimension exceeds " + std::to_string(kMaxEnumerationDimension));
  }
  auto extended = extend_all_one(code, p);
  auto base_dist = weight_distribution(code);
  auto ext_dist = weight_distribution(extended);

  ExtensionReport report{code, extended, p, base_dist, ext_dist};
  report.base_d = base_dist.min_nonzero_weight();
  report.base_d_max = base_dist.max_weight();
  report.predicted_d = predicted_min_distance(static_cast<long>(report.base_d), static_cast<long>(report.base_d_max),
                                              static_cast<long>(code.length()), static_cast<long>(p));
  report.verified_d = ext_dist.min_nonzero_weight();
  report.coefficient_identity = ext_dist == extended_distribution(base_dist, p);
  return report;
}

std::string format_report(const ExtensionReport& r) {
  std::ostringstream out;
  out << "base: [" << r.base.length() << "," << r.base.dimension() << "," << r.base_d << "] dmax=" << r.base_d_max
      << "\n";
  out << "pad: " << r.p << "\n";
  out << "extended: [" << r.extended.length() << "," << r.extended.dimension() << "," << r.verified_d << "]\n";
  out << "predicted_d=" << r.predicted_d << " verified_d=" << r.verified_d << "\n";
  out << "coefficient_identity=" << (r.coefficient_identity ? "ok" : "FAILED") << "\n";
  out << "enumerator: " << enumerator_string(r.extended_distribution) << "\n";
  out << "prediction: " << (r.prediction_holds() ? "holds" : "VIOLATED") << "\n";
  return out.str();
}

}  // namespace lcode
