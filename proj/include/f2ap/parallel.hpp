// Copyright 2026 The f2ap Authors
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

#ifndef F2AP_PARALLEL_HPP_
#define F2AP_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace f2ap {

// Worker count from F2AP_THREADS, else hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("F2AP_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, count) into contiguous blocks and runs body(block, begin, end)
// on each. Block boundaries depend only on count and the block count, so
// callers that reduce per-block results in block order are deterministic.
template <class Body>
void parallel_blocks(std::size_t count, std::size_t blocks, Body&& body) {
  if (count == 0) return;
  blocks = std::max<std::size_t>(1, std::min(blocks, count));
  auto range = [&](std::size_t b) {
    return std::pair<std::size_t, std::size_t>{count * b / blocks, count * (b + 1) / blocks};
  };
  const int workers = std::min<int>(thread_count(), static_cast<int>(blocks));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      auto [lo, hi] = range(b);
      body(b, lo, hi);
    }
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t b = static_cast<std::size_t>(w); b < blocks; b += workers) {
        auto [lo, hi] = range(b);
        body(b, lo, hi);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace f2ap

#endif  // F2AP_PARALLEL_HPP_
