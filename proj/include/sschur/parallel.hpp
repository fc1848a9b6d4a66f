#ifndef SSCHUR_PARALLEL_HPP
#define SSCHUR_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace sschur {

// Number of worker threads: hardware concurrency capped by the THREADS
// environment variable (minimum 1).
unsigned thread_budget();

// Run fn(i) for i in [0, n). Work is split into contiguous chunks; each
// index must write only to its own output slot, which keeps results
// identical to the serial order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace sschur

#endif
