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

#include "quintrace/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "quintrace/parallel.hpp"

namespace quintrace {

Integer griesmer_sum(unsigned k, const Integer& d) {
  if (k == 0 || d <= 0) throw std::invalid_argument("griesmer_sum needs K > 0 and d > 0");
  Integer sum = 0;
  for (unsigned j = 0; j < k; ++j) {
    const Integer div = pow2(j);
    sum += (d + div - 1) / div;
  }
  return sum;
}

GriesmerReport is_distance_optimal(const CodeSpec& spec) {
  GriesmerReport r;
  r.m = spec.m;
  r.n = spec.gray_length;
  r.k = static_cast<unsigned>(spec.dimension);
  const auto table = published_table(spec.m);
  r.d = std::min_element(table.begin(), table.end(), [](const TableRow& a, const TableRow& b) {
          return a.weight < b.weight;
        })->weight;
  r.sum_at_d_plus_1 = griesmer_sum(r.k, r.d + 1);
  r.slack = r.sum_at_d_plus_1 - r.n;
  r.optimal = r.slack > 0;
  r.claim_applies = spec.parity == ParityClass::Odd && spec.m > 6;
  return r;
}

namespace {

// Searches for `depth` more distinct columns after position `from` whose XOR
// with `acc` is zero; the last one is looked up in `where`.
bool find_dependency(const std::vector<std::uint64_t>& cols,
                     const std::unordered_map<std::uint64_t, std::size_t>& where, std::size_t from,
                     unsigned depth, std::uint64_t acc, std::vector<std::size_t>& chosen) {
  if (depth == 1) {
    const auto it = where.find(acc);
    if (it == where.end() || it->second < from) return false;
    chosen.push_back(it->second);
    return true;
  }
  for (std::size_t i = from; i < cols.size(); ++i) {
    chosen.push_back(i);
    if (find_dependency(cols, where, i + 1, depth - 1, acc ^ cols[i], chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

DualDistanceReport dual_distance(const BinaryMatrix& g, unsigned cap) {
  DualDistanceReport r;
  r.cap = cap;
  r.columns = g.cols();
  r.rank = g.rank();
  if (r.rank != g.rows()) {
    throw RankDeficient("generator matrix has rank " + std::to_string(r.rank) + " < " + std::to_string(g.rows()) +
                        " rows");
  }
  if (r.rank == r.columns) {
    r.dual_trivial = true;
    r.zero_column_absent = true;
    return r;
  }
  const auto cols = g.columns();

  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == 0) {
      r.distance = 1;
      r.certificate = {i};
      return r;
    }
  }
  r.zero_column_absent = true;
  if (cap < 2) {
    r.exceeds_cap = true;
    return r;
  }

  // First occurrence of each column value; a repeat is a weight-2 dual word.
  std::unordered_map<std::uint64_t, std::size_t> where;
  where.reserve(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const auto [it, inserted] = where.emplace(cols[i], i);
    if (!inserted) {
      r.distance = 2;
      r.certificate = {it->second, i};
      return r;
    }
  }

  // Columns are now distinct and nonzero, so a size-w subset with zero sum
  // has w distinct members; the lookup index keeps them ordered.
  for (unsigned w = 3; w <= cap; ++w) {
    std::vector<std::size_t> chosen;
    if (find_dependency(cols, where, 0, w, 0, chosen)) {
      r.distance = w;
      r.certificate = chosen;
      return r;
    }
  }
  r.exceeds_cap = true;
  return r;
}

MinimalityReport ab_condition(const WeightDistribution& dist) {
  MinimalityReport r;
  r.w0 = dist.min_nonzero_weight();
  r.w_inf = dist.max_weight();
  r.ab_holds = 2 * r.w0 > r.w_inf;
  return r;
}

MinimalityReport minimal_codewords(const TraceCode& code, int jobs, std::uint64_t budget) {
  const std::uint64_t n = code.ring().element_count();
  const std::uint64_t words = (code.gray_length() + 63) / 64;
  const Integer cost = Integer(n) * Integer(n) * Integer(words);
  if (cost > budget) {
    throw BudgetExceeded("pairwise minimality scan at m=" + std::to_string(code.degree()) + " needs " + cost.str() +
                         " word operations, over the budget of " + std::to_string(budget));
  }

  const BinaryMatrix g = code.generator_matrix();
  std::vector<BitVector> codewords(n);
  std::vector<std::size_t> weight(n);
  parallel_for(jobs, n, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t a = b; a < e; ++a) {
      codewords[a] = g.encode(a);
      weight[a] = codewords[a].weight();
    }
  });

  // A proper sub-support must have strictly smaller weight; equal supports
  // mean equal codewords over GF(2).
  std::vector<std::uint64_t> by_weight(n - 1);
  std::iota(by_weight.begin(), by_weight.end(), std::uint64_t{1});
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](auto x, auto y) { return weight[x] < weight[y]; });

  std::vector<std::optional<std::uint64_t>> covered(n);
  parallel_for(jobs, n, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t a = std::max<std::uint64_t>(b, 1); a < e; ++a) {
      for (const auto other : by_weight) {
        if (weight[other] >= weight[a]) break;
        if (codewords[other].covered_by(codewords[a])) {
          covered[a] = other;
          break;
        }
      }
    }
  });

  MinimalityReport r;
  WeightDistribution dist;
  dist.spec = code.spec();
  for (std::uint64_t a = 1; a < n; ++a) dist.entries[Integer(weight[a])] += 1;
  r = ab_condition(dist);
  BruteForceMinimality bf;
  bf.nonzero_codewords = n - 1;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (covered[a]) bf.witnesses.push_back({a, *covered[a]});
    else ++bf.minimal_count;
  }
  r.brute_force = std::move(bf);
  return r;
}

}  // namespace quintrace
