#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace vqcrypt::detail {

/// Calls fn(begin, end) over contiguous chunks of [0, n). threads == 0 means
/// hardware concurrency.
template <typename Fn>
void parallel_chunks(size_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const size_t workers = std::min<size_t>(threads, std::max<size_t>(n, 1));
  if (workers <= 1) {
    fn(size_t{0}, n);
    return;
  }
  const size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    const size_t begin = w * chunk;
    const size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

}  // namespace vqcrypt::detail
