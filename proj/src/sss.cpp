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

#include "quintrace/sss.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "quintrace/trace_codes.hpp"

namespace quintrace {

std::string to_string(SchemeClass c) { return c == SchemeClass::Dictatorial ? "dictatorial" : "democratic"; }

MasseyScheme::MasseyScheme(BinaryMatrix g) : g_(std::move(g)) {
  if (g_.cols() == 0) throw std::invalid_argument("empty generator matrix");
  const std::uint64_t col0 = g_.column(0);
  if (col0 == 0) throw std::invalid_argument("column 0 of the generator matrix is zero and cannot carry a secret");
  secret_flip_ = col0 & (~col0 + 1);  // lowest row with a 1 in column 0
  message_mask_ = g_.rows() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g_.rows()) - 1;
}

MasseyScheme MasseyScheme::for_code(const TraceCode& code) { return MasseyScheme(code.generator_matrix()); }

ShareDeal MasseyScheme::deal_message(std::uint64_t message) const {
  ShareDeal d;
  d.message = message & message_mask_;
  d.codeword = g_.encode(d.message);
  d.secret = d.codeword.get(0);
  return d;
}

ShareDeal MasseyScheme::deal(bool secret, std::mt19937_64& rng) const {
  std::uint64_t u = rng() & message_mask_;
  if (deal_message(u).secret != secret) u ^= secret_flip_;
  return deal_message(u);
}

std::optional<RecoveryRelation> MasseyScheme::find_recovery(std::span<const std::size_t> coalition) const {
  std::vector<std::size_t> members(coalition.begin(), coalition.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto j : members) {
    if (j == 0) throw std::invalid_argument("coalition may not contain coordinate 0, which carries the secret");
    if (j >= length()) throw std::out_of_range("coalition coordinate " + std::to_string(j) + " out of range");
  }

  // XOR basis over coalition columns, each entry remembering which members
  // it combines.
  struct Entry {
    std::uint64_t value = 0;
    BitVector combo;
  };
  std::array<std::optional<Entry>, 64> basis;
  auto reduce = [&](std::uint64_t value, BitVector& combo) {
    for (int b = 63; b >= 0 && value != 0; --b) {
      if (!((value >> b) & 1u) || !basis[static_cast<std::size_t>(b)]) continue;
      value ^= basis[static_cast<std::size_t>(b)]->value;
      combo ^= basis[static_cast<std::size_t>(b)]->combo;
    }
    return value;
  };

  std::size_t rank = 0;
  for (std::size_t i = 0; i < members.size() && rank < g_.rows(); ++i) {
    BitVector combo(members.size());
    combo.set(i);
    const std::uint64_t rest = reduce(g_.column(members[i]), combo);
    if (rest == 0) continue;
    basis[static_cast<std::size_t>(std::bit_width(rest) - 1)] = Entry{rest, std::move(combo)};
    ++rank;
  }

  BitVector combo(members.size());
  if (reduce(g_.column(0), combo) != 0) return std::nullopt;

  RecoveryRelation rel;
  rel.length = length();
  for (const auto i : combo.support()) rel.support.push_back(members[i]);
  rel.coalition = std::move(members);
  return rel;
}

bool MasseyScheme::is_valid(const RecoveryRelation& relation) const {
  if (relation.length != length()) return false;
  BitVector y(length());
  y.set(0);
  for (const auto j : relation.support) {
    if (j == 0 || j >= length()) return false;
    if (!std::binary_search(relation.coalition.begin(), relation.coalition.end(), j)) return false;
    y.set(j);
  }
  return g_.syndrome(y) == 0;
}

bool MasseyScheme::reconstruct(const ShareDeal& deal, const RecoveryRelation& relation) const {
  if (deal.codeword.size() != length()) throw std::invalid_argument("deal does not belong to this scheme");
  if (!is_valid(relation)) throw std::invalid_argument("recovery relation is not a dual word of this scheme");
  bool secret = false;
  for (const auto j : relation.support) secret ^= deal.share(j);
  return secret;
}

SchemeClass MasseyScheme::classify(const DualDistanceReport& dual) const {
  if (dual.dual_trivial) throw std::domain_error("dual distance undefined: the dual code is {0}");
  if (dual.distance && *dual.distance == 1) throw std::domain_error("dual distance 1: some coordinate is identically zero");
  if (dual.distance && *dual.distance == 2) return SchemeClass::Dictatorial;
  return SchemeClass::Democratic;
}

SchemeClass MasseyScheme::classify() const { return classify(dual_distance(g_)); }

std::optional<std::size_t> MasseyScheme::duplicate_of_secret_column() const {
  const std::uint64_t col0 = g_.column(0);
  const auto cols = g_.columns();
  for (std::size_t j = 1; j < cols.size(); ++j) {
    if (cols[j] == col0) return j;
  }
  return std::nullopt;
}

}  // namespace quintrace
