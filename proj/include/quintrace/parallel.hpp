/* Copyright (C) 2026 The quintrace Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef QUINTRACE_PARALLEL_HPP
#define QUINTRACE_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace quintrace {

/// std::thread::hardware_concurrency(), at least 1.
inline int default_jobs() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

/// Splits [0, n) into `jobs` contiguous chunks and runs body(begin, end) on
/// each. The chunk boundaries depend only on n and jobs; callers that write
/// to disjoint outputs or merge by summation get results independent of jobs.
template <typename Body>
void parallel_for(int jobs, std::uint64_t n, Body&& body) {
  const std::uint64_t workers = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), 1, std::max<std::uint64_t>(n, 1));
  if (workers == 1) {
    body(std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(n, w * chunk);
    const std::uint64_t end = std::min(n, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace quintrace

#endif  // QUINTRACE_PARALLEL_HPP
