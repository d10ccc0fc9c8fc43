#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace tcdict {

// Statically partitioned parallel loop over [begin, end). Each index is
// visited exactly once; results must be written to per-index slots so the
// outcome is identical to the sequential loop regardless of thread count.
template <typename Fn>
void parallel_for(int begin, int end, int threads, Fn&& fn) {
  const int count = end - begin;
  if (count <= 0) return;
  if (threads <= 1 || count < 2 * threads) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  const int workers = std::min(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  const int chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + w * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tcdict
