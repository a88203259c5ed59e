#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hatgame {

/// Thread count to use when the caller passes 0.
inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks, runs body(begin, end) for each
/// on its own thread and returns the partial results in chunk order.
/// Callers merge the partials in that order, so the merged result depends
/// only on the index order and never on the number of threads.
template <class Partial, class Body>
std::vector<Partial> parallel_chunks(std::uint64_t count, unsigned threads, Body body) {
  threads = resolve_threads(threads);
  std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count));
  std::vector<Partial> partials(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  auto run = [&](std::uint64_t c) {
    std::uint64_t begin = count * c / chunks;
    std::uint64_t end = count * (c + 1) / chunks;
    try {
      partials[c] = body(begin, end);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(run, c);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return partials;
}

}  // namespace hatgame
