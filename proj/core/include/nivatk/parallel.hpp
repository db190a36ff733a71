#pragma once

#include <cstddef>
#include <algorithm>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace nivatk {

// Worker cap: NIVATK_THREADS if set to a positive integer, else the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Runs body(worker, begin, end) over contiguous chunks of [0, n). The first
// exception thrown by any worker is rethrown after all workers join.
template <class Body>
void parallel_chunks(std::size_t n, Body&& body, std::size_t max_workers = 0) {
  std::size_t workers = max_workers ? max_workers : worker_count();
  if (workers > n) workers = n;
  if (workers <= 1) {
    if (n) body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = n * w / workers, end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// Evaluates pred(i) for i in [0, n) and returns the smallest i for which it
// holds. Candidates are evaluated in parallel batches; the answer is the
// same as a sequential scan.
template <class Pred>
std::optional<std::size_t> first_index_where(std::size_t n, Pred&& pred) {
  std::size_t workers = worker_count();
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  for (std::size_t base = 0; base < n; base += workers) {
    std::size_t batch = std::min(workers, n - base);
    std::vector<char> hit(batch, 0);
    parallel_chunks(
        batch,
        [&](std::size_t, std::size_t b, std::size_t e) {
          for (std::size_t i = b; i < e; ++i) hit[i] = pred(base + i) ? 1 : 0;
        },
        batch);
    for (std::size_t i = 0; i < batch; ++i)
      if (hit[i]) return base + i;
  }
  return std::nullopt;
}

}  // namespace nivatk
