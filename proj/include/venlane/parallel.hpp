#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace venlane {

/// Worker cap from VENLANE_THREADS; unset or invalid means single-threaded.
inline int worker_count() {
  const char* env = std::getenv("VENLANE_THREADS");
  if (env == nullptr) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (...) {
    return 1;
  }
}

/// Calls fn(begin, end) over contiguous chunks of [0, n). Chunk boundaries are
/// fixed by `chunk`, not by the worker count, so per-item results never depend
/// on how many workers ran.
template <typename Fn>
void parallel_chunks(int n, int chunk, Fn&& fn) {
  const int n_chunks = (n + chunk - 1) / chunk;
  const int workers = std::min(worker_count(), std::max(1, n_chunks));
  if (workers <= 1) {
    for (int c = 0; c < n_chunks; ++c) fn(c * chunk, std::min(n, (c + 1) * chunk));
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int c = w; c < n_chunks; c += workers) fn(c * chunk, std::min(n, (c + 1) * chunk));
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace venlane
