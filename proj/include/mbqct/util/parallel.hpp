#pragma once

#include <cstddef>
#include <functional>

namespace mbqct {

// Number of hardware threads (>= 1).
int default_workers();

// Runs fn(0) ... fn(n-1) on up to `workers` threads.  Tasks are pulled from
// a shared counter, so completion order is arbitrary; callers must write
// results into per-index slots to stay deterministic.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace mbqct
