#pragma once

#include <cstddef>
#include <functional>

namespace vdw {

// Worker count: VDW_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for every i in [0, n) across worker_count() threads. Each
// index is visited exactly once; callers write results into slot i, so the
// output never depends on scheduling. The first exception thrown by any
// body is rethrown after all workers have stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace vdw
