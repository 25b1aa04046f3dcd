#include "canosdf/threads.hpp"

#include <atomic>
#include <thread>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace canosdf {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) {
  g_max_threads.store(n < 0 ? 0 : n);
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() {
  int n = g_max_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(int64_t n, int64_t grain,
                     const std::function<void(int64_t, int64_t)>& fn) {
  if (n <= 0) return;
  if (grain < 1) grain = 1;
  const int64_t nchunks = (n + grain - 1) / grain;
  const int workers = std::min<int64_t>(max_threads(), nchunks);
  if (workers <= 1) {
    for (int64_t c = 0; c < nchunks; ++c)
      fn(c * grain, std::min(n, (c + 1) * grain));
    return;
  }
  std::atomic<int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int64_t c = next.fetch_add(1);
        if (c >= nchunks) break;
        fn(c * grain, std::min(n, (c + 1) * grain));
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace canosdf
