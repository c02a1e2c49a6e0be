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

#include "quintrace/trace_codes.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "quintrace/parallel.hpp"

namespace quintrace {

namespace {

constexpr std::uint32_t kNotAUnit = std::numeric_limits<std::uint32_t>::max();

inline unsigned parity(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x)) & 1u; }

Integer ipow(const Integer& base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

void check_degree(int m) {
  if (m < 1 || m > FieldContext::kMaxDegree) {
    throw std::out_of_range("extension degree must lie in 1..12, got " + std::to_string(m));
  }
}

}  // namespace

Integer pow2(unsigned e) {
  Integer r = 1;
  r <<= e;
  return r;
}

CodeSpec CodeSpec::for_degree(int m) {
  check_degree(m);
  CodeSpec spec;
  spec.m = m;
  spec.parity = parity_class_of(m);
  const Integer q = pow2(static_cast<unsigned>(m));
  switch (spec.parity) {
    case ParityClass::Odd:
      spec.length = (q - 1) * (ipow(q, 4) - 1);
      break;
    case ParityClass::SinglyEven:
      spec.length = (q - 1) * ipow(q * q - 1, 2);
      break;
    case ParityClass::DoublyEven:
      spec.length = ipow(q - 1, 5);
      break;
  }
  spec.gray_length = 5 * spec.length;
  spec.dimension = 5 * m;
  return spec;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Enumerated:
      return "enumerated";
    case Provenance::Theoretical:
      return "theoretical";
    case Provenance::Classified:
      return "classified";
  }
  return "unknown";
}

Integer WeightDistribution::total() const {
  Integer t = 0;
  for (const auto& [w, f] : entries) t += f;
  return t;
}

Integer WeightDistribution::first_moment() const {
  Integer t = 0;
  for (const auto& [w, f] : entries) t += w * f;
  return t;
}

Integer WeightDistribution::expected_first_moment() const {
  return spec.gray_length * pow2(static_cast<unsigned>(5 * spec.m - 1));
}

Integer WeightDistribution::min_nonzero_weight() const {
  for (const auto& [w, f] : entries) {
    if (w != 0 && f != 0) return w;
  }
  throw std::domain_error("distribution has no nonzero weight");
}

Integer WeightDistribution::max_weight() const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->second != 0) return it->first;
  }
  throw std::domain_error("empty distribution");
}

std::vector<TableRow> published_table(int m) {
  check_degree(m);
  const auto u = static_cast<unsigned>(m);
  const Integer q = pow2(u);
  const Integer half = pow2(u - 1);  // 2^(m-1)
  switch (parity_class_of(m)) {
    case ParityClass::Odd:
      return {
          {5 * (pow2(5 * u - 1) - pow2(4 * u - 1) - half), (q - 1) * (ipow(q, 4) - 1)},
          {5 * (pow2(5 * u - 1) - pow2(4 * u - 1)), ipow(q, 4) - 1},
          {5 * (pow2(5 * u - 1) - half), q - 1},
      };
    case ParityClass::SinglyEven: {
      const Integer q2m1 = q * q - 1;
      return {
          {5 * q2m1 * (pow2(3 * u - 1) - pow2(2 * u - 1) - half), 2 * (q - 1) * q2m1},
          {5 * (q - 1) * (pow2(2 * u - 1) - 1) * pow2(2 * u), q2m1 * q2m1},
          {5 * ((q - 1) * q2m1 * q2m1 + 1) / 2, (q - 1) * q2m1 * q2m1},
          {5 * (q - 1) * q2m1 * pow2(2 * u - 1), 2 * q2m1},
          {5 * q2m1 * q2m1 * half, q - 1},
      };
    }
    case ParityClass::DoublyEven:
      return {
          {5 * ipow(q - 1, 3) * (q - 2) * half, 10 * ipow(q - 1, 2)},
          {5 * (q - 1) * (q - 2) * (pow2(2 * u) - pow2(u + 1) + 2) * half, 5 * ipow(q - 1, 4)},
          {5 * (ipow(q - 1, 5) + 1) / 2, ipow(q - 1, 5)},
          {5 * ipow(q - 1, 2) * (pow2(3 * u - 1) - pow2(2 * u - 1) + half), 10 * ipow(q - 1, 3)},
          {5 * ipow(q - 1, 4) * half, 5 * (q - 1)},
      };
  }
  return {};
}

WeightDistribution theoretical_distribution(const CodeSpec& spec) {
  WeightDistribution d;
  d.spec = spec;
  d.provenance = Provenance::Theoretical;
  d.entries[0] = 1;
  for (const auto& row : published_table(spec.m)) d.entries[row.weight] += row.frequency;
  return d;
}

Integer doubly_even_class_weight(int m, int t) {
  check_degree(m);
  if (t < 0 || t > 5) throw std::out_of_range("class index must lie in 0..5");
  const Integer q1 = pow2(static_cast<unsigned>(m)) - 1;
  const Integer s = 5 * ipow(q1, 5);
  const Integer theta = 5 * ipow(q1, static_cast<unsigned>(5 - t));
  return t % 2 == 0 ? Integer((s - theta) / 2) : Integer((s + theta) / 2);
}

Integer doubly_even_proof_weight(int m, int t) {
  check_degree(m);
  const auto u = static_cast<unsigned>(m);
  const Integer q = pow2(u);
  const Integer half = pow2(u - 1);
  switch (t) {
    case 0:
      return 0;
    case 1:
      return 5 * (q - 1) * (q - 2) * (pow2(2 * u) - pow2(u + 1) + 2) * half;
    case 2:
      return 5 * ipow(q - 1, 2) * (pow2(3 * u - 1) - pow2(2 * u - 1) + half);
    case 3:
      return 5 * ipow(q - 1, 3) * (q - 2) * half;
    case 4:
      return 5 * ipow(q - 1, 4) * half;
    case 5:
      return 5 * (ipow(q - 1, 5) + 1) / 2;
    default:
      throw std::out_of_range("class index must lie in 0..5");
  }
}

std::array<std::uint8_t, 5> gray(const RingElement& r) {
  if (r.degree != 1) throw std::invalid_argument("the Gray map is defined on R = R_1");
  std::array<std::uint8_t, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (r.c[i] > 1) throw std::invalid_argument("coefficient outside GF(2)");
    out[i] = static_cast<std::uint8_t>(r.c[i]);
  }
  return out;
}

int lee_weight(const RingElement& r) {
  const auto bits = gray(r);
  return std::accumulate(bits.begin(), bits.end(), 0);
}

BitVector gray_image(std::span<const RingElement> word) {
  BitVector bits(5 * word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    const auto g = gray(word[j]);
    for (std::size_t k = 0; k < 5; ++k) {
      if (g[k]) bits.set(5 * j + k);
    }
  }
  return bits;
}

std::int64_t theta_of(const BitVector& bits) {
  return static_cast<std::int64_t>(bits.size()) - 2 * static_cast<std::int64_t>(bits.weight());
}

Integer enumeration_cost(const CodeSpec& spec) { return spec.codeword_count() * spec.length; }

TraceCode::TraceCode(int m) : ring_(m), spec_(CodeSpec::for_degree(m)) {
  if (m > kMaxDegree) {
    throw std::length_error("TraceCode materializes units and is limited to m <= 4, got " + std::to_string(m));
  }
  units_ = ring_.enumerate_units();
  if (units_.size() != ring_.unit_count()) throw std::logic_error("unit enumeration disagrees with |R_m^*|");

  const std::uint64_t n = ring_.element_count();
  index_.assign(n, kNotAUnit);
  spectrum_.assign(n, 0);
  for (std::size_t j = 0; j < units_.size(); ++j) {
    index_[units_[j]] = static_cast<std::uint32_t>(j);
    spectrum_[units_[j]] = 1;
  }
  // Walsh-Hadamard transform of the unit indicator.
  for (std::uint64_t len = 1; len < n; len <<= 1) {
    for (std::uint64_t i = 0; i < n; i += 2 * len) {
      for (std::uint64_t j = i; j < i + len; ++j) {
        const std::int32_t a = spectrum_[j];
        const std::int32_t b = spectrum_[j + len];
        spectrum_[j] = a + b;
        spectrum_[j + len] = a - b;
      }
    }
  }

  trace_forms_.resize(ring_.field().size());
  for (std::uint32_t c = 0; c < ring_.field().size(); ++c) trace_forms_[c] = ring_.field().trace_form(static_cast<Elem>(c));
}

std::optional<std::size_t> TraceCode::unit_index(std::uint64_t packed) const {
  if (packed >= index_.size() || index_[packed] == kNotAUnit) return std::nullopt;
  return index_[packed];
}

std::vector<RingElement> TraceCode::evaluate(const RingElement& a) const {
  std::vector<RingElement> word;
  word.reserve(units_.size());
  for (const auto u : units_) word.push_back(ring_.trace(ring_.mul(a, ring_.unpack(u))));
  return word;
}

std::array<std::uint64_t, 5> TraceCode::masks(std::uint64_t packed) const {
  const RingElement a = ring_.unpack(packed);
  const auto m = static_cast<unsigned>(degree());
  std::array<std::uint64_t, 5> out{};
  for (unsigned k = 0; k < 5; ++k) {
    std::uint64_t mask = 0;
    for (unsigned j = 0; j < 5; ++j) mask |= std::uint64_t{trace_forms_[a.c[(k + 5 - j) % 5]]} << (j * m);
    out[k] = mask;
  }
  return out;
}

std::uint64_t TraceCode::codeword_lee_weight(std::uint64_t packed) const {
  const auto mk = masks(packed);
  std::uint64_t w = 0;
  for (const std::uint64_t x : units_) {
    w += parity(mk[0] & x) + parity(mk[1] & x) + parity(mk[2] & x) + parity(mk[3] & x) + parity(mk[4] & x);
  }
  return w;
}

std::int64_t TraceCode::theta(std::uint64_t packed) const {
  std::int64_t t = 0;
  for (const auto mask : masks(packed)) t += spectrum_[mask];
  return t;
}

BitVector TraceCode::gray_codeword(std::uint64_t packed) const {
  const auto mk = masks(packed);
  BitVector bits(gray_length());
  for (std::size_t j = 0; j < units_.size(); ++j) {
    for (std::size_t k = 0; k < 5; ++k) {
      if (parity(mk[k] & units_[j])) bits.set(5 * j + k);
    }
  }
  return bits;
}

std::vector<std::uint64_t> TraceCode::enumerate_weights(int jobs) const {
  std::vector<std::uint64_t> weights(ring_.element_count(), 0);
  parallel_for(jobs, weights.size(), [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t a = begin; a < end; ++a) weights[a] = codeword_lee_weight(a);
  });
  return weights;
}

BinaryMatrix TraceCode::generator_matrix() const {
  const auto k = static_cast<std::size_t>(spec_.dimension);
  BinaryMatrix g(k, gray_length());
  for (std::size_t r = 0; r < k; ++r) g.row(r) = gray_codeword(std::uint64_t{1} << r);
  return g;
}

WeightDistribution distribution_from_weights(const CodeSpec& spec, std::span<const std::uint64_t> weights) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const auto w : weights) ++hist[w];
  WeightDistribution d;
  d.spec = spec;
  d.provenance = Provenance::Enumerated;
  for (const auto& [w, f] : hist) d.entries[Integer(w)] = Integer(f);
  return d;
}

WeightDistribution enumerate_distribution(const CodeSpec& spec, int jobs, std::uint64_t budget) {
  const Integer cost = enumeration_cost(spec);
  if (spec.m > TraceCode::kMaxDegree || cost > budget) {
    throw BudgetExceeded("full enumeration at m=" + std::to_string(spec.m) + " needs " + cost.str() +
                         " trace evaluations, over the budget of " + std::to_string(budget) +
                         "; use the theoretical or classified distribution instead");
  }
  const TraceCode code(spec.m);
  const auto weights = code.enumerate_weights(jobs);
  return distribution_from_weights(spec, weights);
}

ClassifiedDistribution classified_distribution(const TraceCode& code, std::mt19937_64& rng, int extra, int jobs) {
  const QuinticRing& ring = code.ring();
  if (ring.parity_class() != ParityClass::DoublyEven) {
    throw std::domain_error("classified distribution needs 4 | m");
  }
  const std::uint64_t n = ring.element_count();
  const int workers = std::max(1, jobs);
  std::vector<std::array<std::uint64_t, 6>> partial(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = (n + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
  parallel_for(workers, static_cast<std::uint64_t>(workers), [&](std::uint64_t wb, std::uint64_t we) {
    for (std::uint64_t w = wb; w < we; ++w) {
      auto& counts = partial[w];
      counts.fill(0);
      const std::uint64_t end = std::min(n, (w + 1) * chunk);
      for (std::uint64_t a = w * chunk; a < end; ++a) {
        const auto parts = ring.crt_decompose(ring.unpack(a));
        ++counts[static_cast<std::size_t>(std::count_if(parts.begin(), parts.end(), [](Elem e) { return e != 0; }))];
      }
    }
  });

  ClassifiedDistribution out;
  out.distribution.spec = code.spec();
  out.distribution.provenance = Provenance::Classified;
  const std::uint32_t q = ring.field().size();
  for (int t = 0; t <= 5; ++t) {
    auto& cls = out.classes[static_cast<std::size_t>(t)];
    cls.nonzero = t;
    cls.size = 0;
    for (const auto& counts : partial) cls.size += counts[static_cast<std::size_t>(t)];

    std::array<Elem, 5> canonical{};
    for (int j = 0; j < t; ++j) canonical[static_cast<std::size_t>(j)] = 1;
    cls.representatives.push_back(ring.crt_recompose(canonical));
    for (int r = 0; r < extra; ++r) {
      std::array<std::size_t, 5> slots{0, 1, 2, 3, 4};
      for (std::size_t i = 4; i > 0; --i) std::swap(slots[i], slots[rng() % (i + 1)]);
      std::array<Elem, 5> parts{};
      for (int j = 0; j < t; ++j) parts[slots[static_cast<std::size_t>(j)]] = static_cast<Elem>(1 + rng() % (q - 1));
      cls.representatives.push_back(ring.crt_recompose(parts));
    }
    for (const auto& rep : cls.representatives) cls.measured.push_back(code.codeword_lee_weight(rep));
    cls.weight = cls.measured.front();
    if (!std::all_of(cls.measured.begin(), cls.measured.end(), [&](std::uint64_t w) { return w == cls.weight; })) {
      std::ostringstream msg;
      msg << "representatives of the class with " << t << " nonzero CRT components disagree on weight:";
      for (const auto w : cls.measured) msg << ' ' << w;
      throw ClassificationError(msg.str());
    }
    out.distribution.entries[Integer(cls.weight)] += cls.size;
  }
  return out;
}

TableAdjudication adjudicate_doubly_even_table(const ClassifiedDistribution& classified) {
  const int m = classified.distribution.spec.m;
  const auto table = published_table(m);
  TableAdjudication adj;
  adj.printed_pairing_holds = true;
  adj.proof_weights_hold = true;
  adj.character_sum_weights_hold = true;
  for (int t = 1; t <= 5; ++t) {
    const auto& cls = classified.classes[static_cast<std::size_t>(t)];
    TableAdjudication::Row row;
    row.nonzero = t;
    row.size = cls.size;
    row.measured = cls.weight;
    row.character_sum_weight = doubly_even_class_weight(m, t);
    row.proof_weight = doubly_even_proof_weight(m, t);
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (table[r].frequency == cls.size) {
        row.printed_row = static_cast<int>(r) + 1;
        row.printed_weight = table[r].weight;
        row.printed_pair_holds = table[r].weight == cls.weight;
      }
    }
    adj.printed_pairing_holds = adj.printed_pairing_holds && row.printed_pair_holds;
    adj.proof_weights_hold = adj.proof_weights_hold && row.proof_weight == cls.weight;
    adj.character_sum_weights_hold = adj.character_sum_weights_hold && row.character_sum_weight == cls.weight;
    adj.rows.push_back(row);
  }

  // Alternative reading: rows 1 and 4 carry each other's frequencies.
  auto swapped = table;
  std::swap(swapped[0].frequency, swapped[3].frequency);
  adj.row1_row4_swap_holds = std::all_of(swapped.begin(), swapped.end(), [&](const TableRow& r) {
    return std::any_of(classified.classes.begin(), classified.classes.end(),
                       [&](const WeightClassRecord& c) { return c.size == r.frequency && Integer(c.weight) == r.weight; });
  });

  std::ostringstream v;
  std::vector<int> good;
  std::vector<int> bad;
  for (const auto& row : adj.rows) (row.printed_pair_holds ? good : bad).push_back(row.printed_row);
  std::sort(good.begin(), good.end());
  std::sort(bad.begin(), bad.end());
  v << "printed rows";
  for (const int r : good) v << ' ' << r;
  v << " pair correctly with measured class weights";
  for (const auto& row : adj.rows) {
    if (row.printed_pair_holds) continue;
    v << "; printed row " << row.printed_row << " (frequency " << row.size << ", " << row.nonzero
      << " nonzero CRT components) shows weight " << row.printed_weight << " but the class measures " << row.measured;
  }
  v << "; the row-1/row-4 frequency swap " << (adj.row1_row4_swap_holds ? "holds" : "does not hold");
  int proof_hits = 0;
  for (const auto& row : adj.rows) proof_hits += row.proof_weight == row.measured ? 1 : 0;
  v << "; the per-class weights of the published case analysis hold for " << proof_hits << " of 5 classes";
  v << "; the factorized character sum (s - 5(-1)^t (q-1)^(5-t))/2 "
    << (adj.character_sum_weights_hold ? "matches every class" : "does not match every class");
  adj.verdict = v.str();
  return adj;
}

}  // namespace quintrace
