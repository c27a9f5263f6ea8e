#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace edlab {

// Runs fn(i) for i in [0, count) on up to `workers` threads. Work items must
// write to disjoint slots; results are then independent of scheduling. With
// workers <= 1 everything runs inline on the caller's thread.
template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  int nthreads = std::min(workers, count);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace edlab
