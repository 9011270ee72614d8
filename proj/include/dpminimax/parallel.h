// Copyright 2026 The dpminimax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPMINIMAX_PARALLEL_H_
#define DPMINIMAX_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "absl/status/status.h"

namespace dpminimax {

// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks write
// their results into caller-owned slots indexed by i, so the outcome does not
// depend on scheduling. Returns the error of the lowest failing index.
inline absl::Status ParallelFor(size_t count, int workers,
                                const std::function<absl::Status(size_t)>& task) {
  std::vector<absl::Status> status(count);
  const size_t threads =
      workers <= 1 ? 1 : std::min<size_t>(static_cast<size_t>(workers), count);
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) status[i] = task(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          status[i] = task(i);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }
  for (const absl::Status& s : status) {
    if (!s.ok()) return s;
  }
  return absl::OkStatus();
}

}  // namespace dpminimax

#endif  // DPMINIMAX_PARALLEL_H_
