#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lcode/gf2.hpp"

namespace lcode {

/// Binary linear [n,k] code given by a full-rank k x n generator matrix.
class LinearCode {
 public:
  /// Throws Error if `gen` is rank deficient.
  explicit LinearCode(BitMatrix gen);

  const BitMatrix& generator() const { return gen_; }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }

  /// Codeword m * Gamma for a message whose bit i selects generator row i.
  BitVector encode(std::uint64_t message) const;

 private:
  BitMatrix gen_;
};

/// Coefficients A_0..A_n of the weight enumerator.
struct WeightDistribution {
  std::size_t n = 0;
  std::vector<std::uint64_t> counts;  // size n + 1

  WeightDistribution() = default;
  explicit WeightDistribution(std::size_t length) : n(length), counts(length + 1, 0) {}

  std::uint64_t operator[](std::size_t w) const { return w < counts.size() ? counts[w] : 0; }
  std::uint64_t total() const;

  /// Smallest / largest w > 0 with A_w > 0. Throw if there is no nonzero codeword.
  std::size_t min_nonzero_weight() const;
  std::size_t max_weight() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Largest dimension accepted by exhaustive enumeration.
inline constexpr std::size_t kMaxEnumerationDimension = 24;

/// Exact distribution over all 2^k codewords, Gray-code order within partitions.
/// The message space is split on its top `prefix_bits` bits; partitions run in
/// parallel (see worker_count()) and are summed, so the result does not depend on it.
WeightDistribution weight_distribution(const LinearCode& code);
WeightDistribution weight_distribution(const LinearCode& code, std::size_t prefix_bits, std::size_t workers);

std::size_t min_distance(const LinearCode& code);
std::size_t max_weight(const LinearCode& code);

/// "1+1082x^16+2560x^18+..." in ascending exponent order; zero terms omitted.
std::string enumerator_string(const WeightDistribution& dist);

/// One "w count" line per nonzero A_w, ascending w.
std::string format_distribution(const WeightDistribution& dist);
WeightDistribution parse_distribution(const std::string& text, std::size_t n);

/// Griesmer lower bound on n: sum over i < k of ceil(d / 2^i).
std::uint64_t griesmer_bound(std::uint64_t k, std::uint64_t d);

}  // namespace lcode
