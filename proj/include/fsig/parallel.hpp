#ifndef FSIG_PARALLEL_HPP
#define FSIG_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace fsig {

// Worker count: FSIG_THREADS if set (clamped to >= 1), else the hardware
// concurrency.  Read once per process.
std::size_t worker_count();

// Runs fn(0..n-1), distributing indices over worker_count() threads.  Callers
// must write results into per-index slots so output is deterministic.  The
// first exception thrown by any worker is rethrown after all threads join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fsig

#endif
