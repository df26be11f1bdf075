#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace residua {

// Applies fn(begin, end) over a contiguous partition of [0, n). With
// threads <= 1 this is a plain call; otherwise one OS thread per chunk.
// fn must only write state disjoint between chunks (e.g. slots of a
// pre-sized vector indexed by item).
inline void parallel_chunks(std::size_t n, unsigned threads,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    fn(0, n);
    return;
  }
  std::size_t parts = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(parts);
  std::size_t chunk = (n + parts - 1) / parts;
  for (std::size_t p = 0; p < parts; ++p) {
    std::size_t begin = p * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace residua
