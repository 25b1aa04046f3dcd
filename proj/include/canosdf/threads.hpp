#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>

namespace canosdf {

// Global worker cap (CLI --threads). 0 means "hardware default".
void set_max_threads(int n);
int max_threads();

// Runs fn(begin, end) over fixed-size chunks of [0, n). Chunk boundaries
// depend only on n and grain, never on the thread count, so reductions
// that accumulate per-chunk in index order stay bit-deterministic.
void parallel_chunks(int64_t n, int64_t grain,
                     const std::function<void(int64_t, int64_t)>& fn);

}  // namespace canosdf
