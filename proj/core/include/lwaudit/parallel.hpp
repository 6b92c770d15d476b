#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lwaudit {

/// Thread count used when a caller passes 0.
inline unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Evaluates fn(i) for i in [0, count) over contiguous shards and returns the
/// results in index order. Output is independent of the thread count as long
/// as fn is a pure function of i. The first exception (lowest shard index) is
/// rethrown after all workers join.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, unsigned threads,
                                 const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> out(count);
  if (count == 0) return out;
  if (threads == 0) threads = default_threads();
  const std::size_t shards = std::min<std::size_t>(threads, count);
  if (shards <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }

  std::vector<std::exception_ptr> errors(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) {
      const std::size_t lo = count * s / shards;
      const std::size_t hi = count * (s + 1) / shards;
      workers.emplace_back([&, lo, hi, s] {
        try {
          for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace lwaudit
