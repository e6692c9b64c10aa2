#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace facealg {

  // Runs fn(i) for i in [0, count) on up to `jobs` threads. Callers write
  // results into preallocated slots, so output order never depends on
  // scheduling. The first exception thrown is rethrown after all workers stop.
  template <typename Fn>
  void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    std::size_t const workers
        = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        fn(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     work = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          next = count;
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t) {
      pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
      t.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace facealg
