#ifndef HEMILAT_PARALLEL_HPP
#define HEMILAT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace hemilat {

inline int default_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/** Evaluates `eval` over [0, count) and returns the result at the smallest
    index for which it produced a value. Workers own contiguous chunks and
    consult the shared best index to cut short work that can no longer win,
    so the outcome is index-ordered and independent of scheduling. */
template <class Result, class Eval>
std::optional<std::pair<std::size_t, Result>> parallel_first(std::size_t count, int jobs,
                                                             Eval eval) {
  if (count == 0) return std::nullopt;
  const std::size_t workers =
      std::min<std::size_t>(std::max(jobs, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto r = eval(i)) return {{i, std::move(*r)}};
    return std::nullopt;
  }

  std::atomic<std::size_t> best{count};
  std::vector<std::optional<std::pair<std::size_t, Result>>> found(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::size_t lo = count * w / workers;
      const std::size_t hi = count * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (auto r = eval(i)) {
          found[w] = {{i, std::move(*r)}};
          std::size_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    });
  }
  for (auto& t : threads) t.join();

  std::optional<std::pair<std::size_t, Result>> out;
  for (auto& f : found)
    if (f && (!out || f->first < out->first)) out = std::move(f);
  return out;
}

}  // namespace hemilat

#endif  // HEMILAT_PARALLEL_HPP
