#include "lcode/code.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "lcode/error.hpp"
#include "lcode/parallel.hpp"

namespace lcode {

LinearCode::LinearCode(BitMatrix gen) : gen_(std::move(gen)) {
  const auto r = rank(gen_);
  if (r != gen_.rows()) {
    throw Error("generator matrix is rank deficient: rank " + std::to_string(r) + " < " +
                std::to_string(gen_.rows()) + " rows");
  }
}

BitVector LinearCode::encode(std::uint64_t message) const {
  BitVector cw(length());
  for (std::size_t i = 0; i < dimension(); ++i) {
    if ((message >> i) & 1U) cw ^= gen_.row(i);
  }
  return cw;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

std::size_t WeightDistribution::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) return w;
  }
  throw Error("trivial code has no nonzero codeword");
}

std::size_t WeightDistribution::max_weight() const {
  for (std::size_t w = counts.size(); w-- > 1;) {
    if (counts[w] != 0) return w;
  }
  throw Error("trivial code has no nonzero codeword");
}

WeightDistribution weight_distribution(const LinearCode& code) {
  const std::size_t workers = worker_count();
  std::size_t prefix_bits = 0;
  while ((std::size_t{1} << prefix_bits) < 4 * workers && prefix_bits + 10 < code.dimension()) ++prefix_bits;
  return weight_distribution(code, prefix_bits, workers);
}

WeightDistribution weight_distribution(const LinearCode& code, std::size_t prefix_bits, std::size_t workers) {
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();
  if (k > kMaxEnumerationDimension) {
    throw Error("enumeration too large: k = " + std::to_string(k) + " exceeds " +
                std::to_string(kMaxEnumerationDimension));
  }
  prefix_bits = std::min(prefix_bits, k);
  const std::size_t low_bits = k - prefix_bits;
  const std::size_t partitions = std::size_t{1} << prefix_bits;

  std::vector<std::uint64_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = code.generator().row(i).word();

  std::vector<std::vector<std::uint64_t>> partial(partitions, std::vector<std::uint64_t>(n + 1, 0));
  parallel_for(partitions, workers, [&](std::size_t part) {
    auto& counts = partial[part];
    std::uint64_t cw = 0;
    for (std::size_t b = 0; b < prefix_bits; ++b) {
      if ((part >> b) & 1U) cw ^= rows[low_bits + b];
    }
    ++counts[std::popcount(cw)];
    // Gray code over the low message bits: step i flips message bit ctz(i).
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < steps; ++i) {
      cw ^= rows[std::countr_zero(i)];
      ++counts[std::popcount(cw)];
    }
  });

  WeightDistribution dist(n);
  for (const auto& counts : partial) {
    for (std::size_t w = 0; w <= n; ++w) dist.counts[w] += counts[w];
  }
  return dist;
}

std::size_t min_distance(const LinearCode& code) {
  if (code.dimension() == 0) throw Error("trivial code has no nonzero codeword");
  return weight_distribution(code).min_nonzero_weight();
}

std::size_t max_weight(const LinearCode& code) {
  if (code.dimension() == 0) throw Error("trivial code has no nonzero codeword");
  return weight_distribution(code).max_weight();
}

std::string enumerator_string(const WeightDistribution& dist) {
  std::string out;
  for (std::size_t w = 0; w < dist.counts.size(); ++w) {
    const auto c = dist.counts[w];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (w == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += w == 1 ? std::string("x") : "x^" + std::to_string(w);
  }
  return out.empty() ? "0" : out;
}

std::string format_distribution(const WeightDistribution& dist) {
  std::string out;
  for (std::size_t w = 0; w < dist.counts.size(); ++w) {
    if (dist.counts[w] != 0) out += std::to_string(w) + " " + std::to_string(dist.counts[w]) + "\n";
  }
  return out;
}

WeightDistribution parse_distribution(const std::string& text, std::size_t n) {
  WeightDistribution dist(n);
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::size_t w = 0;
    std::uint64_t count = 0;
    std::string rest;
    if (!(fields >> w >> count) || (fields >> rest)) throw ParseError(line_no, 0, "expected \"w count\"");
    if (w > n) throw ParseError(line_no, 0, "weight " + std::to_string(w) + " exceeds length " + std::to_string(n));
    dist.counts[w] = count;
  }
  return dist;
}

std::uint64_t griesmer_bound(std::uint64_t k, std::uint64_t d) {
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < k; ++i) {
    sum += i >= 63 ? 1 : (d + (std::uint64_t{1} << i) - 1) >> i;
  }
  return sum;
}

}  // namespace lcode
