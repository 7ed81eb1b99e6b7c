// Minimal deterministic work partitioning: tasks are indexed, results are
// merged by the caller in index order, so output never depends on scheduling.
#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace g2 {

inline unsigned worker_count(std::size_t tasks) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return (unsigned)std::min<std::size_t>(hw, tasks);
}

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task) {
  unsigned workers = worker_count(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) task(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace g2
