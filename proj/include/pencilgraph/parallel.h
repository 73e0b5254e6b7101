#ifndef PENCILGRAPH_PARALLEL_H_
#define PENCILGRAPH_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace pg {

// 0 selects the number of hardware threads.
void SetNumThreads(int n);
int NumThreads();

// Runs fn(begin, end) over contiguous chunks of [0, n). Chunk boundaries
// depend on the thread count, so fn must only write to per-index slots.
template <typename Fn>
void ParallelFor(size_t n, Fn&& fn) {
  const size_t threads =
      std::min<size_t>(static_cast<size_t>(NumThreads()), n);
  if (threads <= 1) {
    if (n) fn(size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const size_t chunk = (n + threads - 1) / threads;
  for (size_t b = 0; b < n; b += chunk) {
    const size_t e = std::min(n, b + chunk);
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace pg

#endif  // PENCILGRAPH_PARALLEL_H_
