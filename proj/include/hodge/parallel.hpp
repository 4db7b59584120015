#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hodge {

/// Worker count: HODGE_SPECTRA_WORKERS if set and positive, otherwise the
/// hardware concurrency (at least 1).
int default_workers();

/// Calls fn(i) for i in [0, n) on up to `workers` threads. Each index is
/// processed exactly once; callers write results into slot i so the
/// outcome does not depend on scheduling. The first exception is rethrown.
template<typename Fn>
void parallel_for(std::size_t n, int workers, Fn && fn)
{
  if (workers <= 0) { workers = default_workers(); }
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) { fn(i); }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) { error = std::current_exception(); }
        next = n;
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) { pool.emplace_back(body); }
  pool.clear();
  if (error) { std::rethrow_exception(error); }
}

}  // namespace hodge
