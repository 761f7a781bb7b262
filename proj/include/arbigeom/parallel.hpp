#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace arbigeom::detail {

/// 0 means "auto" (hardware concurrency); the result is always >= 1.
inline std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [begin, end) split into contiguous blocks, one
/// per worker. Callers guarantee fn writes only to slot i of shared
/// output, which keeps results identical for every thread count.
template <typename F>
void parallel_for(std::size_t begin, std::size_t end, std::size_t threads, F&& fn) {
  const std::size_t total = end > begin ? end - begin : 0;
  std::size_t workers = std::min(resolve_threads(threads), total);
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace arbigeom::detail
