#include "lcode/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>

#include "lcode/error.hpp"
#include "lcode/parallel.hpp"

namespace lcode {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

SearchState::SearchState(const DiophantineSystem& system, Selection x, const SearchConfig& config)
    : system_(&system), config_(config), x_(std::move(x)) {
  if (config_.lambda.num <= 0 || config_.lambda.den <= 0) throw Error("length penalty must be positive");
  if (x_.size() != system.cols.size()) throw Error("selection length does not match the system");
  const std::uint32_t upper = config_.domain == Domain::binary ? 1 : config_.cap;
  for (auto v : x_) {
    if (v > upper) throw Error("selection entry outside the search domain");
  }
  for (auto wi : row_weights(system, x_)) w_.push_back(static_cast<std::int64_t>(wi));
  for (std::size_t j = 0; j < x_.size(); ++j) length_ += std::int64_t{system.cols[j].length} * x_[j];
  cost_ = length_penalty(length_);
  for (auto wi : w_) cost_ += row_penalty(wi);
}

std::int64_t SearchState::row_penalty(std::int64_t w) const {
  std::int64_t p = std::max<std::int64_t>(0, static_cast<std::int64_t>(system_->d) - w);
  if (system_->d_max) p += std::max<std::int64_t>(0, w - static_cast<std::int64_t>(*system_->d_max));
  return p * config_.lambda.den;
}

std::int64_t SearchState::length_penalty(std::int64_t len) const {
  const std::int64_t gap = len - static_cast<std::int64_t>(system_->n);
  return (gap < 0 ? -gap : gap) * config_.lambda.num;
}

double SearchState::cost() const { return static_cast<double>(cost_) / static_cast<double>(config_.lambda.den); }

bool SearchState::can_move(std::size_t j, int direction) const {
  if (j >= x_.size()) return false;
  if (config_.domain == Domain::binary) return direction == (x_[j] == 0 ? 1 : -1);
  if (direction == 1) return x_[j] < config_.cap;
  if (direction == -1) return x_[j] > 0;
  return false;
}

std::int64_t SearchState::scaled_delta(std::size_t j, int direction) const {
  if (!can_move(j, direction)) throw Error("move leaves the search domain");
  const std::size_t m = x_.size();
  std::int64_t delta = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    const std::int64_t aij = system_->a[i * m + j];
    if (aij == 0) continue;
    delta += row_penalty(w_[i] + direction * aij) - row_penalty(w_[i]);
  }
  const std::int64_t len = length_ + direction * std::int64_t{system_->cols[j].length};
  return delta + length_penalty(len) - length_penalty(length_);
}

void SearchState::apply(std::size_t j, int direction) {
  const auto delta = scaled_delta(j, direction);
  const std::size_t m = x_.size();
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] += direction * std::int64_t{system_->a[i * m + j]};
  length_ += direction * std::int64_t{system_->cols[j].length};
  x_[j] = static_cast<std::uint32_t>(static_cast<std::int64_t>(x_[j]) + direction);
  cost_ += delta;
}

void SearchState::verify_weights() const {
  const auto fresh = row_weights(*system_, x_);
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (static_cast<std::int64_t>(fresh[i]) != w_[i]) throw Error("incremental row weights drifted");
  }
}

double selection_cost(const DiophantineSystem& system, const Selection& x, const SearchConfig& config) {
  auto full = config;
  full.domain = Domain::bounded;
  full.cap = std::numeric_limits<std::uint32_t>::max();
  return SearchState(system, x, full).cost();
}

double incremental_cost_delta(const DiophantineSystem& system, const Selection& x, std::size_t j, int direction,
                              const SearchConfig& config) {
  SearchState state(system, x, config);
  return static_cast<double>(state.scaled_delta(j, direction)) / static_cast<double>(config.lambda.den);
}

namespace {

struct RestartOutcome {
  Selection best;
  std::int64_t best_cost = 0;
  std::uint64_t iterations = 0;
};

RestartOutcome run_restart(const DiophantineSystem& system, const SearchConfig& config, std::uint32_t restart) {
  std::mt19937_64 rng(config.seed + restart);
  const std::size_t m = system.cols.size();

  std::uint64_t total_length = 0;
  for (const auto& c : system.cols) total_length += c.length;
  Selection init(m, 0);
  if (total_length > 0) {
    for (auto& v : init) v = uniform_below(rng, total_length) < system.n ? 1 : 0;
  }

  SearchState state(system, std::move(init), config);
  RestartOutcome out{state.selection(), state.scaled_cost(), 0};
  if (m == 0) return out;

  const std::uint64_t tenure = std::min<std::uint64_t>(7, m / 2);
  std::vector<std::uint64_t> tabu_until(m, 0);

  struct Move {
    std::size_t j;
    int dir;
  };
  std::vector<Move> ties;

  while (out.best_cost != 0 && out.iterations < config.max_iterations) {
    const std::uint64_t step = out.iterations + 1;
    std::int64_t best_delta = std::numeric_limits<std::int64_t>::max();
    bool best_allowed = false;
    ties.clear();

    for (std::size_t j = 0; j < m; ++j) {
      for (int dir : {1, -1}) {
        if (!state.can_move(j, dir)) continue;
        const auto delta = state.scaled_delta(j, dir);
        const bool allowed = tabu_until[j] < step || state.scaled_cost() + delta < out.best_cost;
        // Allowed moves always beat tabu ones; tabu moves are only a fallback.
        if (allowed != best_allowed) {
          if (!allowed) continue;
          best_allowed = true;
          best_delta = delta;
          ties.clear();
        } else if (delta > best_delta) {
          continue;
        } else if (delta < best_delta) {
          best_delta = delta;
          ties.clear();
        }
        ties.push_back({j, dir});
      }
    }
    if (ties.empty()) break;

    const auto move = ties[ties.size() == 1 ? 0 : uniform_below(rng, ties.size())];
    state.apply(move.j, move.dir);
    tabu_until[move.j] = step + tenure;
    out.iterations = step;

    if (state.scaled_cost() < out.best_cost) {
      out.best_cost = state.scaled_cost();
      out.best = state.selection();
    }
    if (step % kDriftCheckInterval == 0) state.verify_weights();
  }
  return out;
}

}  // namespace

SearchResult search(const DiophantineSystem& system, const SearchConfig& config) {
  const std::uint32_t restarts = std::max<std::uint32_t>(config.restarts, 1);
  std::vector<std::optional<RestartOutcome>> outcomes(restarts);
  std::atomic<std::uint32_t> first_found{restarts};

  parallel_for(restarts, config.workers == 0 ? worker_count() : config.workers, [&](std::size_t r) {
    if (r > first_found.load()) return;
    auto outcome = run_restart(system, config, static_cast<std::uint32_t>(r));
    if (outcome.best_cost == 0) {
      auto cur = first_found.load();
      while (r < cur && !first_found.compare_exchange_weak(cur, static_cast<std::uint32_t>(r))) {
      }
    }
    outcomes[r] = std::move(outcome);
  });

  const std::uint32_t last = first_found.load() < restarts ? first_found.load() : restarts - 1;
  SearchResult result;
  std::optional<std::uint32_t> chosen;
  for (std::uint32_t r = 0; r <= last; ++r) {
    const auto& o = *outcomes[r];
    result.iterations_used += o.iterations;
    if (!chosen || o.best_cost < outcomes[*chosen]->best_cost) chosen = r;
  }
  const auto& best = *outcomes[*chosen];
  result.restart = *chosen;
  result.best_selection = best.best;
  result.best_cost = static_cast<double>(best.best_cost) / static_cast<double>(config.lambda.den);
  result.status = best.best_cost == 0 ? SearchStatus::found : SearchStatus::exhausted;
  return result;
}

}  // namespace lcode
