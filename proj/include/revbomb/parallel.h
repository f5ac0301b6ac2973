// Copyright 2026 The Revbomb Authors.
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

#ifndef REVBOMB_PARALLEL_H_
#define REVBOMB_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace revbomb {

inline int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, n) into one contiguous chunk per worker and runs
// fn(worker, begin, end) on each. Callers merge per-worker results in worker
// order, which keeps output independent of scheduling. The first exception
// thrown by any worker is rethrown.
template <typename Fn>
void ParallelChunks(std::size_t n, int threads, Fn &&fn) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(ResolveThreads(threads),
                                             std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    fn(0, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : pool) t.join();
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline int ChunkCount(std::size_t n, int threads) {
  return static_cast<int>(std::min<std::size_t>(
      ResolveThreads(threads), std::max<std::size_t>(n, 1)));
}

}  // namespace revbomb

#endif  // REVBOMB_PARALLEL_H_
