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

#ifndef QUINTRACE_TRACE_CODES_HPP
#define QUINTRACE_TRACE_CODES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quintrace/bits.hpp"
#include "quintrace/quintic_ring.hpp"

namespace quintrace {

using Integer = boost::multiprecision::cpp_int;

Integer pow2(unsigned e);

/// Parameters of C(m,2,L) and its Gray image.
struct CodeSpec {
  int m = 1;
  ParityClass parity = ParityClass::Odd;
  Integer length;       // L = |R_m^*|
  Integer gray_length;  // s = 5L
  int dimension = 5;    // 5m

  /// 1 <= m <= 12
  static CodeSpec for_degree(int m);
  Integer codeword_count() const { return pow2(static_cast<unsigned>(5 * m)); }
};

enum class Provenance { Enumerated, Theoretical, Classified };
std::string to_string(Provenance p);

struct WeightDistribution {
  CodeSpec spec;
  Provenance provenance = Provenance::Enumerated;
  std::map<Integer, Integer> entries;  // weight -> frequency

  Integer total() const;
  /// sum of weight * frequency
  Integer first_moment() const;
  /// s * 2^(5m-1)
  Integer expected_first_moment() const;
  bool satisfies_first_moment() const { return first_moment() == expected_first_moment(); }
  Integer min_nonzero_weight() const;
  Integer max_weight() const;
  bool same_entries(const WeightDistribution& other) const { return entries == other.entries; }
};

/// A published weight row, nonzero weights only, in printed order.
struct TableRow {
  Integer weight;
  Integer frequency;
};

/// Rows of the weight table for m's parity class, evaluated at m exactly as
/// printed (three rows for odd m, five otherwise).
std::vector<TableRow> published_table(int m);

/// Zero row plus the published rows, provenance theoretical.
WeightDistribution theoretical_distribution(const CodeSpec& spec);

/// Doubly-even m: weight of ev(a) when exactly t CRT components of a are
/// nonzero, from the factorized character sum (s - 5(-1)^t (q-1)^(5-t)) / 2.
Integer doubly_even_class_weight(int m, int t);
/// Doubly-even m: the weight the published case analysis assigns to t
/// nonzero components.
Integer doubly_even_proof_weight(int m, int t);

/// Gray image of an element of R = R_1: its coefficient 5-tuple.
std::array<std::uint8_t, 5> gray(const RingElement& r);
/// Hamming weight of gray(r).
int lee_weight(const RingElement& r);
/// Concatenated Gray images; bit 5j+k is coefficient k of word[j].
BitVector gray_image(std::span<const RingElement> word);
/// sum over bits of (-1)^bit
std::int64_t theta_of(const BitVector& bits);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Trace evaluations a full enumeration needs: 2^(5m) * L.
Integer enumeration_cost(const CodeSpec& spec);
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000'000ULL;

/**
 * The code C(m,2,L) = { (Tr(a u))_{u in R_m^*} : a in R_m } for m <= 4.
 *
 * Construction materializes the canonical unit list, an index from packed
 * unit to coordinate, the trace form of every field element, and the Walsh
 * spectrum of the unit indicator over GF(2)^(5m).
 *
 * With x packed as 5m bits, coefficient k of Tr(a x) is the parity of
 * mask_k(a) & x, where block j of mask_k(a) is the trace form of
 * a_{(k-j) mod 5}. Weights stream over units through these masks; Theta sums
 * the spectrum at the five masks.
 */
class TraceCode {
 public:
  static constexpr int kMaxDegree = 4;

  explicit TraceCode(int m);

  const QuinticRing& ring() const noexcept { return ring_; }
  const CodeSpec& spec() const noexcept { return spec_; }
  int degree() const noexcept { return ring_.degree(); }
  std::size_t length() const noexcept { return units_.size(); }
  std::size_t gray_length() const noexcept { return 5 * units_.size(); }
  std::span<const std::uint64_t> units() const noexcept { return units_; }
  /// Coordinate of a packed unit, nullopt for non-units.
  std::optional<std::size_t> unit_index(std::uint64_t packed) const;

  /// ev(a) by ring multiplication and coefficientwise trace.
  std::vector<RingElement> evaluate(const RingElement& a) const;

  /// Hamming weight of the Gray image of ev(a), streamed over units.
  std::uint64_t codeword_lee_weight(const RingElement& a) const { return codeword_lee_weight(ring_.pack(a)); }
  std::uint64_t codeword_lee_weight(std::uint64_t packed) const;

  /// sum over the s Gray bits of (-1)^bit, read off the unit spectrum.
  std::int64_t theta(const RingElement& a) const { return theta(ring_.pack(a)); }
  std::int64_t theta(std::uint64_t packed) const;

  /// Gray image of ev(a) through the mask route.
  BitVector gray_codeword(std::uint64_t packed) const;

  /// Weight of every codeword, indexed by packed a.
  std::vector<std::uint64_t> enumerate_weights(int jobs) const;

  /// Rows are Gray images of ev(v^i x^k), row index i*m + k, so that
  /// message bit r matches packed bit r of a.
  BinaryMatrix generator_matrix() const;

  std::array<std::uint64_t, 5> masks(std::uint64_t packed) const;

 private:
  QuinticRing ring_;
  CodeSpec spec_;
  std::vector<std::uint64_t> units_;
  std::vector<std::uint32_t> index_;
  std::vector<Elem> trace_forms_;
  std::vector<std::int32_t> spectrum_;
};

/// Exact histogram of codeword weights. Throws BudgetExceeded when
/// enumeration_cost(spec) > budget or m > 4.
WeightDistribution enumerate_distribution(const CodeSpec& spec, int jobs,
                                          std::uint64_t budget = kDefaultEnumerationBudget);
WeightDistribution distribution_from_weights(const CodeSpec& spec, std::span<const std::uint64_t> weights);

/// One CRT zero-pattern orbit of R_m for 4 | m.
struct WeightClassRecord {
  int nonzero = 0;
  Integer size;
  std::vector<RingElement> representatives;
  std::vector<std::uint64_t> measured;
  std::uint64_t weight = 0;
};

struct ClassifiedDistribution {
  WeightDistribution distribution;
  std::array<WeightClassRecord, 6> classes;
};

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counts every a in R_m by number of nonzero CRT components and measures
/// each class weight on a canonical representative plus `extra` random ones.
/// Requires 4 | m and m <= 4. Throws ClassificationError if representatives
/// of one class disagree.
ClassifiedDistribution classified_distribution(const TraceCode& code, std::mt19937_64& rng, int extra = 4,
                                               int jobs = 1);

/// Measured doubly-even classes against the printed weight table and the
/// per-class weights of the published case analysis.
struct TableAdjudication {
  struct Row {
    int nonzero = 0;
    Integer size;
    std::uint64_t measured = 0;
    Integer character_sum_weight;
    Integer proof_weight;
    int printed_row = 0;  // 1-based printed row whose frequency equals size, 0 if none
    Integer printed_weight;
    bool printed_pair_holds = false;
  };
  std::vector<Row> rows;
  bool printed_pairing_holds = false;
  bool row1_row4_swap_holds = false;
  bool proof_weights_hold = false;
  bool character_sum_weights_hold = false;
  std::string verdict;
};

TableAdjudication adjudicate_doubly_even_table(const ClassifiedDistribution& classified);

}  // namespace quintrace

#endif  // QUINTRACE_TRACE_CODES_HPP
