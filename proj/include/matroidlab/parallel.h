// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDLAB_PARALLEL_H_
#define MATROIDLAB_PARALLEL_H_

#include <atomic>
#include <cstddef>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matroidlab {

// 0 means "whatever OpenMP would use by default".
inline int ResolveThreads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

// Smallest i in [0, count) with pred(i), scanning in order.
template <typename Pred>
std::optional<std::size_t> FirstMatchSerial(std::size_t count, Pred&& pred) {
  for (std::size_t i = 0; i < count; ++i) {
    if (pred(i)) return i;
  }
  return std::nullopt;
}

// Same result as FirstMatchSerial regardless of thread count or schedule:
// workers reduce by minimum index and skip indices past the best found so
// far. `pred` must not throw.
template <typename Pred>
std::optional<std::size_t> FirstMatch(std::size_t count, int threads,
                                      Pred&& pred) {
  const int workers = ResolveThreads(threads);
  if (workers <= 1 || count < 2) return FirstMatchSerial(count, pred);
  std::atomic<std::size_t> best{count};
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
  for (long i = 0; i < n; ++i) {
    const std::size_t index = static_cast<std::size_t>(i);
    if (index >= best.load(std::memory_order_relaxed)) continue;
    if (pred(index)) {
      std::size_t current = best.load(std::memory_order_relaxed);
      while (index < current &&
             !best.compare_exchange_weak(current, index,
                                         std::memory_order_relaxed)) {
      }
    }
  }
  const std::size_t found = best.load();
  if (found == count) return std::nullopt;
  return found;
}

}  // namespace matroidlab

#endif  // MATROIDLAB_PARALLEL_H_
