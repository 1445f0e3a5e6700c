#pragma once

#include <cstddef>
#include <functional>

namespace halfline {

// Worker count: HS_THREADS if set (clamped to [1, 256]), else the
// hardware concurrency.
int thread_cap();

// Runs body(i) for i in [0, n). Iterations must not depend on each other;
// results should be written into preallocated slots so that the output is
// identical to the serial order. Exceptions from workers are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace halfline
