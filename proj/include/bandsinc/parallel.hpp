#pragma once

#include <cstddef>
#include <functional>

namespace bandsinc {

/// Worker cap from BANDSINC_THREADS; 0 or unset means hardware concurrency.
unsigned worker_count() noexcept;

/// Calls body(i) for i in [0, n) split into contiguous chunks across workers.
/// Each index is visited exactly once, so results written per index do not
/// depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace bandsinc
