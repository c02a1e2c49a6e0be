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

#ifndef QUINTRACE_ANALYSIS_HPP
#define QUINTRACE_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quintrace/bits.hpp"
#include "quintrace/trace_codes.hpp"

namespace quintrace {

/// sum_{j=0}^{K-1} ceil(d / 2^j)
Integer griesmer_sum(unsigned k, const Integer& d);

struct GriesmerReport {
  int m = 0;
  Integer n;
  unsigned k = 0;
  Integer d;
  Integer sum_at_d_plus_1;
  bool optimal = false;  // sum_at_d_plus_1 > n
  Integer slack;         // sum_at_d_plus_1 - n
  /// Odd m > 6, the only range with a published optimality claim.
  bool claim_applies = false;
};

/// N = s, K = 5m, d = smallest nonzero weight of the published table for m.
GriesmerReport is_distance_optimal(const CodeSpec& spec);

class RankDeficient : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DualDistanceReport {
  std::size_t rank = 0;
  std::size_t columns = 0;
  unsigned cap = 3;
  /// Minimum dual weight when found within the cap.
  std::optional<unsigned> distance;
  /// Columns summing to zero, one witness of `distance`.
  std::vector<std::size_t> certificate;
  /// Every column was scanned and none is zero.
  bool zero_column_absent = false;
  /// No dependency of size <= cap exists (distance > cap).
  bool exceeds_cap = false;
  /// rank == columns: the dual is {0} and has no distance.
  bool dual_trivial = false;
};

/// Smallest number of linearly dependent columns of g: zero column scan,
/// duplicate-column hashing, then bounded subset search up to cap. Throws
/// RankDeficient if g does not have full row rank.
DualDistanceReport dual_distance(const BinaryMatrix& g, unsigned cap = 3);

struct NonMinimalWitness {
  std::uint64_t codeword;  // message (packed a) of the covering codeword
  std::uint64_t covered;   // message of a nonzero codeword it covers
};

struct BruteForceMinimality {
  std::uint64_t nonzero_codewords = 0;
  std::uint64_t minimal_count = 0;
  std::vector<NonMinimalWitness> witnesses;  // one per non-minimal codeword
};

struct MinimalityReport {
  Integer w0;
  Integer w_inf;
  bool ab_holds = false;  // 2 w0 > w_inf
  std::optional<BruteForceMinimality> brute_force;
};

/// Throws std::domain_error if the distribution has no nonzero weight.
MinimalityReport ab_condition(const WeightDistribution& dist);

inline constexpr std::uint64_t kDefaultMinimalityBudget = 2'000'000'000ULL;

/// Pairwise support-containment scan over all nonzero Gray codewords.
/// Throws BudgetExceeded when pairs * words exceeds budget.
MinimalityReport minimal_codewords(const TraceCode& code, int jobs = 1,
                                   std::uint64_t budget = kDefaultMinimalityBudget);

}  // namespace quintrace

#endif  // QUINTRACE_ANALYSIS_HPP
