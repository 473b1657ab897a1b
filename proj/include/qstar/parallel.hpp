#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qstar {

/// Worker-count knob shared by the enumeration and assembly routines. Output
/// never depends on it.
struct Parallelism {
  unsigned threads = 1;
};

/// Evaluates fn(0..count-1) over contiguous blocks on up to `threads` threads
/// and returns the results in index order.
template <class Fn>
auto parallel_map(std::size_t count, Parallelism par, Fn&& fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out(count);
  const std::size_t workers = std::min<std::size_t>(std::max(1u, par.threads), count);
  if (workers <= 1) {
    for (std::size_t idx = 0; idx < count; ++idx) out[idx] = fn(idx);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t first = count * w / workers;
      const std::size_t last = count * (w + 1) / workers;
      try {
        for (std::size_t idx = first; idx < last; ++idx) out[idx] = fn(idx);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace qstar
