#ifndef CESARO_PARALLEL_HPP
#define CESARO_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cesaro
{

// Worker count: hardware concurrency, capped by CESARO_LAB_THREADS.
unsigned worker_count();

// Runs body(i) for i in [0, count) over contiguous chunks. Each index is
// handled exactly once; the first exception thrown is rethrown here.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

} // namespace cesaro

#endif
