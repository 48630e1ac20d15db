#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace jstar {

/// Worker cap: JSTAR_THREADS if set (minimum 1), otherwise hardware_concurrency.
inline unsigned thread_budget() {
  if (const char* env = std::getenv("JSTAR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n). fn must be a pure function of i (plus shared
/// immutable state); results land in per-index slots, so the outcome is
/// identical for any thread count. The first exception, by index order of the
/// owning chunk, is rethrown on the caller thread.
inline void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned budget = thread_budget();
  if (budget <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(budget, n));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = n * t / workers;
      const std::size_t hi = n * (t + 1) / workers;
      try {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace jstar
