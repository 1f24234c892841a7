#pragma once

#include <cstddef>
#include <functional>

namespace widthlab {

/// Worker count: hardware concurrency, capped by WIDTHLAB_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write results into preallocated slots so ordering stays deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace widthlab
