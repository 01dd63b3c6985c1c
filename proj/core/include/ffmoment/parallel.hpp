#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ffm {

/// Runs fn(begin, end, chunk) over `chunks` contiguous slices of [0, n) on up
/// to `workers` threads. Chunk boundaries depend only on n and chunks, so
/// callers that merge per-chunk partials in chunk order get results that do
/// not depend on the worker count. The first exception thrown is rethrown.
template <class Fn>
void parallel_chunks(std::size_t n, std::size_t chunks, unsigned workers, Fn&& fn) {
  chunks = std::max<std::size_t>(1, std::min(chunks, std::max<std::size_t>(n, 1)));
  auto bounds = [&](std::size_t c) { return n * c / chunks; };
  workers = std::max(1u, workers);
  if (workers == 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(bounds(c), bounds(c + 1), c);
    return;
  }
  std::mutex mu;
  std::exception_ptr error;
  std::size_t next = 0;
  auto worker = [&] {
    while (true) {
      std::size_t c;
      {
        std::lock_guard lock(mu);
        if (next >= chunks || error) return;
        c = next++;
      }
      try {
        fn(bounds(c), bounds(c + 1), c);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Number of chunks used for data-parallel sweeps; fixed so partitioning is
/// independent of the worker count.
inline constexpr std::size_t kSweepChunks = 64;

/// out[i] = fn(i) for i in [0, n).
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned workers, Fn&& fn) {
  std::vector<T> out(n);
  parallel_chunks(n, kSweepChunks, workers, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t i = b; i < e; ++i) out[i] = fn(i);
  });
  return out;
}

}  // namespace ffm
