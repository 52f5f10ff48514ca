#pragma once

#include <cstddef>
#include <functional>

namespace cantorlab {

/// Worker count: CANTORLAB_THREADS when set to a positive integer, else hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n) across worker threads. The first exception thrown by any
/// item is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cantorlab
