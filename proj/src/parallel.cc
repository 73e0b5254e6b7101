#include "pencilgraph/parallel.h"

#include <atomic>

namespace pg {

namespace {
std::atomic<int> g_threads{0};
}  // namespace

void SetNumThreads(int n) { g_threads = n < 0 ? 0 : n; }

int NumThreads() {
  int n = g_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace pg
