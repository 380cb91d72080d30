#ifndef FCFV_PARALLEL_HPP
#define FCFV_PARALLEL_HPP

#include <functional>

namespace fcfv {

/// Number of worker threads: FCFV_NUM_THREADS if set, else the hardware
/// concurrency.
int num_threads();

/// Runs fn(i) for i in [0, count) on num_threads() workers in contiguous
/// chunks. Each index is visited exactly once, so writes to index-owned
/// slots are race-free and results are independent of the schedule.
void parallel_for(int count, const std::function<void(int)>& fn);

} // namespace fcfv

#endif
