#pragma once

#include <cstddef>
#include <functional>

namespace tmlab {

// Worker count: explicit value if nonzero, else TMLAB_WORKERS, else hardware concurrency.
unsigned worker_count(unsigned requested = 0);

// Runs body(i) for i in [0, count) on up to `workers` threads. Exceptions are rethrown
// on the caller's thread (the one from the smallest index wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned workers = 0);

} // namespace tmlab
