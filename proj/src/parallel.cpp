#include "qsup/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qsup {

std::size_t worker_count() {
  if (const char* env = std::getenv("QSUP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  // Contiguous blocks per worker: partitioning affects only scheduling, not
  // results, because every index writes its own slot.
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t base = count / workers;
  std::size_t extra = count % workers;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t len = base + (w < extra ? 1 : 0);
    std::size_t end = begin + len;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
    begin = end;
  }
  for (auto& th : pool) th.join();
}

}  // namespace qsup
