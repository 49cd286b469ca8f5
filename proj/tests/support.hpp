#pragma once

// Test-only generators and brute-force oracles. The oracles work on plain
// vectors of bits and never call into the packed library routines they check.

#include <cstdint>
#include <random>
#include <vector>

#include "lcode/code.hpp"
#include "lcode/gf2.hpp"

namespace lcode::testing {

using Bits = std::vector<int>;
using Rows = std::vector<Bits>;

inline BitVector random_vector(std::mt19937_64& rng, std::size_t len) { return BitVector(len, rng()); }

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<BitVector> data;
  for (std::size_t i = 0; i < rows; ++i) data.push_back(random_vector(rng, cols));
  return BitMatrix(cols, std::move(data));
}

/// Random full-rank k x n generator.
inline LinearCode random_code(std::mt19937_64& rng, std::size_t k, std::size_t n) {
  for (;;) {
    auto m = random_matrix(rng, k, n);
    if (rank(m) == k) return LinearCode(std::move(m));
  }
}

inline Rows to_rows(const BitMatrix& m) {
  Rows out(m.rows(), Bits(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j) ? 1 : 0;
  }
  return out;
}

/// Codeword for `message` computed column by column.
inline Bits naive_codeword(const Rows& gen, std::size_t n, std::uint64_t message) {
  Bits cw(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    int s = 0;
    for (std::size_t i = 0; i < gen.size(); ++i) s ^= static_cast<int>((message >> i) & 1U) & gen[i][j];
    cw[j] = s;
  }
  return cw;
}

inline int naive_weight(const Bits& v) {
  int w = 0;
  for (int b : v) w += b;
  return w;
}

/// A_w by encoding every message independently.
inline std::vector<std::uint64_t> naive_distribution(const BitMatrix& gen) {
  const auto rows = to_rows(gen);
  std::vector<std::uint64_t> counts(gen.cols() + 1, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << gen.rows()); ++m) {
    ++counts[naive_weight(naive_codeword(rows, gen.cols(), m))];
  }
  return counts;
}

struct NaiveExtremes {
  int min_nonzero = -1;
  int max = 0;
};

inline NaiveExtremes naive_extremes(const BitMatrix& gen) {
  const auto counts = naive_distribution(gen);
  NaiveExtremes e;
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] == 0) continue;
    if (e.min_nonzero < 0) e.min_nonzero = static_cast<int>(w);
    e.max = static_cast<int>(w);
  }
  return e;
}

inline int naive_rank(Rows rows) {
  int r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) != r && rows[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

/// Companion matrix of x^3 + x + 1 acting on column vectors (order 7).
inline BitMatrix companion_x3_x_1() {
  BitMatrix m(3, 3);
  m.set(1, 0, true);  // e0 -> e1
  m.set(2, 1, true);  // e1 -> e2
  m.set(0, 2, true);  // e2 -> e0 + e1
  m.set(1, 2, true);
  return m;
}

}  // namespace lcode::testing
