#pragma once

#include <cstddef>
#include <functional>

namespace lcode {

/// Worker cap: LCODE_THREADS when set to a positive integer, else the hardware count (at least 1).
std::size_t worker_count();

/// Runs task(i) for every i in [0, count) on up to `workers` threads.
/// Tasks are claimed in index order; exceptions from any task are rethrown.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& task);

}  // namespace lcode
