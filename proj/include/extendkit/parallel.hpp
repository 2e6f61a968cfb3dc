#pragma once

#include <cstddef>
#include <functional>

namespace extendkit {

// Worker count: EXTENDKIT_THREADS when set and nonzero, else the hardware
// concurrency.
unsigned thread_budget();

// Runs body(i) for i in [0, n) on up to `threads` workers (0 = budget).
// Each index is visited exactly once; callers write results by index, so
// output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace extendkit
