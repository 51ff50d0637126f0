#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace fnls::parallel {

// Process-wide worker count used by lattice scans and ensemble loops.
// Defaults to 1.
void set_threads(int count);
int threads();

// Evaluates fn(i) for i in [0, count) and returns the results indexed by i.
// Callers reduce the returned vector in index order, which keeps every
// reduction bit-identical for any worker count.
template <class Fn>
auto map_indexed(int count, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, int>> {
  using Result = std::invoke_result_t<Fn&, int>;
  std::vector<Result> results(static_cast<std::size_t>(std::max(count, 0)));
  const int workers = std::min(threads(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        results[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace fnls::parallel
