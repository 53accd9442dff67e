#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace graphmass {

/// Runs fn(begin, end) over a partition of [0, n) on up to `threads`
/// workers. Callers key per-index randomness by the index itself, so the
/// partition never affects results. The first worker exception is
/// rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::int64_t n, int threads, Fn&& fn) {
  if (threads < 1) throw std::invalid_argument("parallel_chunks: thread count must be >= 1");
  if (n <= 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(threads, n));
  if (workers == 1) {
    fn(std::int64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min<std::int64_t>(begin + chunk, n);
    if (begin >= end) break;
    pool.emplace_back([&fn, &error, &error_mutex, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace graphmass
