#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace gnf {

// Runs f(begin, end) over contiguous chunks of [0, n). Chunk boundaries
// depend only on n and threads, so results written per index are
// independent of scheduling.
template <class F>
void parallel_for(int n, int threads, F&& f) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    f(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int b = t * chunk, e = std::min(n, b + chunk);
    pool.emplace_back([&, b, e, t] {
      try {
        if (b < e) f(b, e);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace gnf
