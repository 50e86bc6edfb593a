#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace commsplit {

/// Runs fn(0..count-1) across hardware threads. The callable must only
/// touch its own output slot; the first exception wins and is rethrown
/// after all workers join.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  if (count <= 0) return;
  unsigned workers = std::thread::hardware_concurrency();
  if (workers > static_cast<unsigned>(count)) workers = count;
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          break;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace commsplit
