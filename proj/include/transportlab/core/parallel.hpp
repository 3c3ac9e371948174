#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace transportlab {

/// Worker cap: TRANSPORTLAB_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t thread_limit();

/// Runs task(0..n-1) on up to thread_limit() threads. Tasks write into
/// caller-owned slots, so result order never depends on scheduling. The first
/// exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

}  // namespace transportlab
