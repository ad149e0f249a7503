#pragma once

// Static work splitting over an index range. Callers pick the worker count;
// results are merged by chunk index so output never depends on it.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sperner {

/// Runs fn(chunk, begin, end) over `chunks` contiguous pieces of [0, count),
/// using at most `workers` threads. Chunk boundaries depend only on `chunks`.
template <class Fn>
void parallel_chunks(std::size_t count, std::size_t chunks, int workers, Fn &&fn) {
  chunks = std::max<std::size_t>(1, std::min(chunks, count == 0 ? 1 : count));
  const auto bounds = [&](std::size_t c) { return count * c / chunks; };
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, chunks);
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c, bounds(c), bounds(c + 1));
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t c = t; c < chunks; c += threads) fn(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto &th : pool) th.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace sperner
