#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace normdepth::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(worker, begin, end) over contiguous chunks of [0, count).
/// Chunks are claimed dynamically; callers must merge per-worker results
/// with an associative, commutative operation.
template <class Body>
void parallel_chunks(std::size_t count, unsigned threads, std::size_t chunk,
                     Body&& body) {
  threads = resolve_threads(threads);
  chunk = std::max<std::size_t>(chunk, 1);
  if (threads <= 1 || count <= chunk) {
    body(0U, std::size_t{0}, count);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t begin = next.fetch_add(chunk);
          if (begin >= count) break;
          body(w, begin, std::min(count, begin + chunk));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace normdepth::detail
