#pragma once

#include <cstddef>
#include <functional>

namespace shallowpack {

/// Worker budget: SHALLOWPACK_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
std::size_t thread_budget();

/// Runs body(i) for i in [0, count) over up to thread_budget() threads with
/// static chunking. Callers write results into per-index slots, so the outcome
/// never depends on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace shallowpack
