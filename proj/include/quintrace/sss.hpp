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

#ifndef QUINTRACE_SSS_HPP
#define QUINTRACE_SSS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "quintrace/analysis.hpp"
#include "quintrace/bits.hpp"

namespace quintrace {

class TraceCode;

/// One dealing: the codeword for `message`; coordinate 0 is the secret and
/// coordinates 1..s-1 are the shares.
struct ShareDeal {
  bool secret = false;
  std::uint64_t message = 0;
  BitVector codeword;

  std::size_t share_count() const noexcept { return codeword.size() - 1; }
  bool share(std::size_t coordinate) const { return codeword.get(coordinate); }
};

/// A dual codeword y with y_0 = 1 and support in {0} + coalition, giving
/// secret = sum of the shares listed in `support`.
struct RecoveryRelation {
  std::vector<std::size_t> coalition;  // sorted, all >= 1
  std::vector<std::size_t> support;    // coalition members with coefficient 1
  std::size_t length = 0;              // s of the scheme that produced it
};

enum class SchemeClass { Democratic, Dictatorial };
std::string to_string(SchemeClass c);

/**
 * Massey secret sharing on the row space of a binary generator matrix.
 *
 * Coordinates are 0-based. The secret rides on coordinate 0; a coalition
 * recovers it iff column 0 of G lies in the span of the coalition's columns.
 */
class MasseyScheme {
 public:
  /// Throws std::invalid_argument if column 0 of g is zero.
  explicit MasseyScheme(BinaryMatrix g);
  static MasseyScheme for_code(const TraceCode& code);

  const BinaryMatrix& generator() const noexcept { return g_; }
  std::size_t length() const noexcept { return g_.cols(); }

  /// Message uniform over { u : (uG)_0 = secret }.
  ShareDeal deal(bool secret, std::mt19937_64& rng) const;
  ShareDeal deal_message(std::uint64_t message) const;

  /// Linear solve over GF(2). nullopt iff the coalition cannot recover.
  /// Throws std::invalid_argument on coordinate 0 or an out-of-range index.
  std::optional<RecoveryRelation> find_recovery(std::span<const std::size_t> coalition) const;

  /// y_0 = 1, supp(y) within {0} + coalition, and G y^T = 0.
  bool is_valid(const RecoveryRelation& relation) const;

  /// Throws std::invalid_argument if the relation does not belong to this
  /// scheme or the deal has the wrong length.
  bool reconstruct(const ShareDeal& deal, const RecoveryRelation& relation) const;

  /// Dictatorial iff the dual distance is 2, democratic iff >= 3. Throws
  /// std::domain_error when the dual distance is undefined or 1.
  SchemeClass classify() const;
  SchemeClass classify(const DualDistanceReport& dual) const;

  /// Smallest j >= 1 whose column equals column 0, if any.
  std::optional<std::size_t> duplicate_of_secret_column() const;

 private:
  BinaryMatrix g_;
  std::uint64_t secret_flip_ = 0;  // a message with (uG)_0 = 1
  std::uint64_t message_mask_ = 0;
};

}  // namespace quintrace

#endif  // QUINTRACE_SSS_HPP
