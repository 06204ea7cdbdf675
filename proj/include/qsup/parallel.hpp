#ifndef QSUP_PARALLEL_HPP
#define QSUP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qsup {

// Worker count used by parallel_for: the QSUP_THREADS environment variable if
// set to a positive integer, otherwise the hardware concurrency.
std::size_t worker_count();

// Runs fn(i) for i in [0, count) across worker_count() threads.  Indices are
// dealt in contiguous blocks; callers that write results into slot i of a
// preallocated buffer get output that is independent of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qsup

#endif  // QSUP_PARALLEL_HPP
