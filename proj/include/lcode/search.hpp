#pragma once

// Seeded local search over orbit selections.
//
// cost(x) = sum_i max(0, d - w_i) + sum_i max(0, w_i - d_max) + lambda * |sum_j l_j x_j - n|
// with w_i = sum_j A[i][j] x_j. Each step applies the single-variable move
// (flip, or +-1 in the bounded domain) with the smallest cost change; ties are
// broken uniformly by the seeded generator. A short tabu list forbids undoing
// a recent move unless it reaches a new best cost. Each restart starts from a
// random selection whose expected length is n.
//
// Restart r uses std::mt19937_64 seeded with seed + r and integer-only
// sampling, so runs are reproducible across platforms and thread counts.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lcode/diophantine.hpp"

namespace lcode {

enum class Domain { binary, bounded };

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;
};

struct SearchConfig {
  std::uint64_t seed = 1;
  std::uint64_t max_iterations = 100000;  // per restart
  std::uint32_t restarts = 10;
  Domain domain = Domain::binary;
  std::uint32_t cap = 1;  // largest multiplicity in the bounded domain
  Rational lambda{1, 1};
  std::size_t workers = 0;  // 0: worker_count()
};

enum class SearchStatus { found, exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  Selection best_selection;
  double best_cost = 0;
  std::uint64_t iterations_used = 0;
  std::uint32_t restart = 0;  // restart that produced best_selection
};

/// Incremental evaluator. Costs are kept as integers scaled by lambda.den.
class SearchState {
 public:
  SearchState(const DiophantineSystem& system, Selection x, const SearchConfig& config);

  const Selection& selection() const { return x_; }
  const std::vector<std::int64_t>& weights() const { return w_; }
  std::int64_t length() const { return length_; }

  std::int64_t scaled_cost() const { return cost_; }
  double cost() const;

  bool can_move(std::size_t j, int direction) const;
  /// Scaled cost change of x_j += direction, in O(rows). Throws on domain violation.
  std::int64_t scaled_delta(std::size_t j, int direction) const;
  void apply(std::size_t j, int direction);

  /// Recomputes the row weights from scratch; throws if the cached ones drifted.
  void verify_weights() const;

 private:
  std::int64_t row_penalty(std::int64_t w) const;
  std::int64_t length_penalty(std::int64_t len) const;

  const DiophantineSystem* system_;
  SearchConfig config_;
  Selection x_;
  std::vector<std::int64_t> w_;
  std::int64_t length_ = 0;
  std::int64_t cost_ = 0;
};

/// Full evaluation of the cost function.
double selection_cost(const DiophantineSystem& system, const Selection& x, const SearchConfig& config = {});

/// cost(x after x_j += direction) - cost(x).
double incremental_cost_delta(const DiophantineSystem& system, const Selection& x, std::size_t j, int direction,
                              const SearchConfig& config = {});

SearchResult search(const DiophantineSystem& system, const SearchConfig& config = {});

inline constexpr std::uint64_t kDriftCheckInterval = 4096;

/// Uniform integer in [0, bound) by rejection sampling.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace lcode
