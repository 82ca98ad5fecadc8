#pragma once
// Bounded fan-out over independent cases. The width comes from the
// CUSPIDOR_THREADS environment variable (default: hardware concurrency).

#include <cstddef>
#include <functional>

namespace cuspidor {

std::size_t thread_count();

// Runs body(i) for i in [0, n). Exceptions are rethrown after all workers
// stop (the first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace cuspidor
