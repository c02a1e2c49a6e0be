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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "quintrace/parallel.hpp"
#include "quintrace/report.hpp"

#ifndef QUINTRACE_CLI_PATH
#error "QUINTRACE_CLI_PATH must name the quintrace executable"
#endif

using namespace quintrace;

namespace {

// Pinned limits.
constexpr double kCriterion1Seconds = 1.0;
constexpr double kCriterion2Seconds = 600.0;
constexpr double kCriterion4Seconds = 300.0;
constexpr int kIdentitySamples = 10000;
constexpr int kClassRepresentatives = 4;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string render(const WeightDistribution& d) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [w, f] : d.entries) {
    out << (first ? "" : ", ") << w << ':' << f;
    first = false;
  }
  out << '}';
  return out.str();
}

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    ok = ok && cond;
    notes.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
  }
};

const int kJobs = default_jobs();

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto d = enumerate_distribution(CodeSpec::for_degree(1), kJobs);
  const double secs = since(t0);
  o.require(render(d) == "{0:1, 35:15, 40:15, 75:1}", "m=1 enumeration " + render(d));
  o.require(d.same_entries(theoretical_distribution(d.spec)), "equals the odd-family formulas at m=1");
  o.require(secs < kCriterion1Seconds, "runtime " + std::to_string(secs) + " s < 1 s");
  return o;
}

WeightDistribution m2_enumerated;
WeightDistribution m3_enumerated;

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  m3_enumerated = enumerate_distribution(CodeSpec::for_degree(3), kJobs);
  const double secs = since(t0);
  o.require(render(m3_enumerated) == "{0:1, 71660:28665, 71680:4095, 81900:7}",
            "m=3 enumeration " + render(m3_enumerated));
  o.require(m3_enumerated.same_entries(theoretical_distribution(m3_enumerated.spec)), "equals the published table");
  o.require(secs <= kCriterion2Seconds, "runtime " + std::to_string(secs) + " s <= 600 s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  m2_enumerated = enumerate_distribution(CodeSpec::for_degree(2), kJobs);
  o.require(render(m2_enumerated) == "{0:1, 1650:90, 1680:225, 1690:675, 1800:30, 2250:3}",
            "m=2 enumeration " + render(m2_enumerated));
  VerifyOptions vo;
  vo.jobs = kJobs;
  vo.samples = 100;
  const auto report = run_verification(2, vo);
  const Check* len = report.find("worked-example-m2-length");
  o.require(len && len->status == CheckStatus::DiscrepancyLogged && len->expected == "1215" && len->actual == "3375",
            "stated length 1215 vs Gray length 3375 reported as discrepancy-logged");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  const TraceCode code(4);
  std::mt19937_64 rng(20260101);
  const auto cd = classified_distribution(code, rng, kClassRepresentatives, kJobs);
  const double secs = since(t0);

  const Integer want[] = {1, 75, 2250, 33750, 253125, 759375};
  bool sizes = true;
  Integer sum = 0;
  for (int t = 0; t <= 5; ++t) {
    sizes = sizes && cd.classes[static_cast<std::size_t>(t)].size == want[t];
    sum += cd.classes[static_cast<std::size_t>(t)].size;
  }
  o.require(sizes, "class sizes 1,75,2250,33750,253125,759375");
  o.require(sum == pow2(20), "class sizes sum to 2^20");

  bool consistent = true;
  std::string measured;
  for (int t = 1; t <= 5; ++t) {
    const auto& c = cd.classes[static_cast<std::size_t>(t)];
    consistent = consistent && c.measured.size() >= kClassRepresentatives;
    for (const auto w : c.measured) consistent = consistent && w == c.weight;
    measured += (measured.empty() ? "" : ",") + std::to_string(c.weight);
  }
  o.require(consistent, "each class constant over >= 4 representatives: " + measured);

  std::string proof;
  bool proof_match = true;
  for (int t = 1; t <= 5; ++t) {
    const Integer p = doubly_even_proof_weight(4, t);
    proof += (proof.empty() ? "" : ",") + p.str();
    proof_match = proof_match && p == cd.classes[static_cast<std::size_t>(t)].weight;
  }
  o.require(proof_match, "measured weights match the case-analysis expressions " + proof);

  const auto adj = adjudicate_doubly_even_table(cd);
  o.require(!adj.verdict.empty(), "row pairing adjudicated: " + adj.verdict);
  o.require(secs <= kCriterion4Seconds, "runtime " + std::to_string(secs) + " s <= 300 s");
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int m = 1; m <= 4; ++m) {
    const TraceCode code(m);
    std::mt19937_64 rng(1000 + static_cast<unsigned>(m));
    std::vector<std::uint64_t> sample(kIdentitySamples);
    for (auto& x : sample) x = rng() & (code.ring().element_count() - 1);
    const auto s = static_cast<std::int64_t>(code.gray_length());
    std::vector<std::uint8_t> bad(sample.size(), 0);
    parallel_for(kJobs, sample.size(), [&](std::uint64_t b, std::uint64_t e) {
      for (std::uint64_t i = b; i < e; ++i) {
        bad[i] = 2 * static_cast<std::int64_t>(code.codeword_lee_weight(sample[i])) != s - code.theta(sample[i]);
      }
    });
    const auto violations = std::count(bad.begin(), bad.end(), std::uint8_t{1});
    o.require(violations == 0, "m=" + std::to_string(m) + ": " + std::to_string(violations) + " violations in " +
                                   std::to_string(kIdentitySamples) + " samples");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto d1 = enumerate_distribution(CodeSpec::for_degree(1), kJobs);
  o.require(d1.first_moment() == 1200 && d1.expected_first_moment() == 1200, "m=1 enumerated: 1200 = 75 * 16");
  o.require(m2_enumerated.satisfies_first_moment(), "m=2 enumerated");
  o.require(m3_enumerated.satisfies_first_moment(), "m=3 enumerated");
  const TraceCode code(4);
  std::mt19937_64 rng(7);
  o.require(classified_distribution(code, rng, 1, kJobs).distribution.satisfies_first_moment(), "m=4 classified");
  std::string logged;
  for (int m = 1; m <= 12; ++m) {
    const auto d = theoretical_distribution(CodeSpec::for_degree(m));
    if (d.spec.parity == ParityClass::DoublyEven) {
      // Printed doubly-even table reproduced verbatim; its moment failure is
      // the logged table discrepancy, not a produced-code property.
      if (!d.satisfies_first_moment()) logged += (logged.empty() ? "" : ",") + std::to_string(m);
      continue;
    }
    o.require(d.satisfies_first_moment(), "theoretical m=" + std::to_string(m));
  }
  o.notes.push_back("logged: printed doubly-even table misses the identity at m=" + logged);
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (int m = 1; m <= 2; ++m) {
    const TraceCode code(m);
    const auto g = code.generator_matrix();
    const auto r = dual_distance(g);
    o.require(r.distance && *r.distance == 2, "m=" + std::to_string(m) + " dual distance 2");
    bool certified = r.certificate.size() == 2 && r.certificate[0] != r.certificate[1];
    if (certified) {
      BitVector y(g.cols());
      y.set(r.certificate[0]);
      y.set(r.certificate[1]);
      certified = g.syndrome(y) == 0;
    }
    o.require(certified, "m=" + std::to_string(m) + " certificate is a weight-2 dual word");
    bool no_zero = r.zero_column_absent;
    for (const auto c : g.columns()) no_zero = no_zero && c != 0;
    o.require(no_zero, "m=" + std::to_string(m) + " all " + std::to_string(g.cols()) + " columns nonzero");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const int m : {7, 9, 11}) {
    const auto r = is_distance_optimal(CodeSpec::for_degree(m));
    o.require(r.optimal, "m=" + std::to_string(m) + " optimal, slack " + r.slack.str());
  }
  const auto r1 = is_distance_optimal(CodeSpec::for_degree(1));
  o.require(r1.sum_at_d_plus_1 == 71 && r1.slack == -4 && !r1.optimal, "m=1 slack 71 - 75 = " + r1.slack.str());
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto a2 = ab_condition(m2_enumerated);
  o.require(a2.ab_holds && a2.w0 == 1650 && a2.w_inf == 2250, "m=2: 2*1650 > 2250");
  const auto a3 = ab_condition(m3_enumerated);
  o.require(a3.ab_holds && a3.w0 == 71660 && a3.w_inf == 81900, "m=3: 2*71660 > 81900");

  const auto b2 = minimal_codewords(TraceCode(2), kJobs);
  o.require(b2.brute_force->minimal_count == 1023 && b2.brute_force->witnesses.empty(),
            "m=2 brute force: " + std::to_string(b2.brute_force->minimal_count) + " of 1023 minimal");

  const TraceCode c1(1);
  const auto b1 = minimal_codewords(c1, kJobs);
  bool all_one = false;
  for (const auto& w : b1.brute_force->witnesses) {
    all_one = all_one || c1.gray_codeword(w.codeword).weight() == c1.gray_length();
  }
  o.require(all_one, "m=1 brute force: all-one codeword is a non-minimal witness");
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (int m = 1; m <= 2; ++m) {
    const TraceCode code(m);
    const auto& ring = code.ring();
    const auto units = code.units();
    const std::size_t n = units.size();
    const std::uint64_t count = ring.element_count();

    // perm[u][j] = coordinate of units[u] * units[j]
    std::vector<std::uint32_t> perm(n * n);
    for (std::size_t u = 0; u < n; ++u) {
      const RingElement ru = ring.unpack(units[u]);
      for (std::size_t j = 0; j < n; ++j) {
        perm[u * n + j] = static_cast<std::uint32_t>(*code.unit_index(ring.pack(ring.mul(ru, ring.unpack(units[j])))));
      }
    }
    std::vector<BitVector> words(count);
    for (std::uint64_t x = 0; x < count; ++x) words[x] = code.gray_codeword(x);

    std::vector<std::uint8_t> regular_bad(count, 0);
    std::vector<std::uint8_t> qc_bad(count, 0);
    const RingElement v = ring.v_power(1);
    parallel_for(kJobs, count, [&](std::uint64_t b, std::uint64_t e) {
      for (std::uint64_t x = b; x < e; ++x) {
        const RingElement a = ring.unpack(x);
        for (std::size_t u = 0; u < n && !regular_bad[x]; ++u) {
          const BitVector& moved = words[ring.pack(ring.mul(a, ring.unpack(units[u])))];
          for (std::size_t j = 0; j < n; ++j) {
            const std::size_t k = perm[u * n + j];
            for (std::size_t c = 0; c < 5; ++c) {
              if (moved.get(5 * j + c) != words[x].get(5 * k + c)) regular_bad[x] = 1;
            }
          }
        }
        const BitVector& shifted = words[ring.pack(ring.mul(v, a))];
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t c = 0; c < 5; ++c) {
            if (words[x].get(5 * j + c) != shifted.get(5 * j + (c + 1) % 5)) qc_bad[x] = 1;
          }
        }
      }
    });
    const auto rb = std::count(regular_bad.begin(), regular_bad.end(), std::uint8_t{1});
    const auto qb = std::count(qc_bad.begin(), qc_bad.end(), std::uint8_t{1});
    o.require(rb == 0, "m=" + std::to_string(m) + " regular action over all " + std::to_string(count) +
                           " elements and " + std::to_string(n) + " units");
    o.require(qb == 0, "m=" + std::to_string(m) + " block-shift closure over all " + std::to_string(count) + " elements");
  }

  const QuinticRing r4(4);
  std::uint64_t miss = 0;
  for (std::uint64_t x = 0; x < r4.element_count(); ++x) {
    const RingElement a = r4.unpack(x);
    miss += r4.crt_recompose(r4.crt_decompose(a)) != a;
  }
  o.require(miss == 0, "m=4 CRT round trip over all 2^20 elements");
  return o;
}

Outcome criterion11() {
  Outcome o;
  const TraceCode c1(1);
  const auto scheme = MasseyScheme::for_code(c1);

  std::vector<RecoveryRelation> relations;
  std::vector<std::size_t> everyone;
  for (std::size_t j = 1; j < scheme.length(); ++j) {
    everyone.push_back(j);
    const std::size_t single[] = {j};
    if (auto r = scheme.find_recovery(single)) relations.push_back(*r);
  }
  relations.push_back(*scheme.find_recovery(everyone));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::size_t> coalition;
    for (std::size_t j = 1; j < scheme.length(); ++j) {
      if (rng() % 10 == 0) coalition.push_back(j);
    }
    if (auto r = scheme.find_recovery(coalition)) relations.push_back(*r);
  }
  std::uint64_t wrong = 0;
  for (std::uint64_t u = 0; u < 32; ++u) {
    const auto d = scheme.deal_message(u);
    for (const auto& r : relations) wrong += scheme.reconstruct(d, r) != d.secret;
  }
  o.require(wrong == 0, "m=1: all 32 dealings x " + std::to_string(relations.size()) + " relations reconstruct");

  const auto dup = scheme.duplicate_of_secret_column();
  bool singleton = false;
  if (dup) {
    const std::size_t single[] = {*dup};
    const auto r = scheme.find_recovery(single);
    singleton = r && r->support == std::vector<std::size_t>{*dup};
    for (std::uint64_t u = 0; singleton && u < 32; ++u) {
      const auto d = scheme.deal_message(u);
      singleton = d.share(*dup) == d.secret;
    }
  }
  o.require(singleton, "singleton coalition at a duplicate column recovers the secret");

  for (int m = 1; m <= 2; ++m) {
    const auto cls = MasseyScheme::for_code(TraceCode(m)).classify();
    o.require(cls == SchemeClass::Dictatorial, "m=" + std::to_string(m) + " " + to_string(cls));
  }
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome criterion12() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / ("quintrace-accept-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto a = dir / "jobs1.json";
  const auto b = dir / "jobs8.json";
  const std::string cli = QUINTRACE_CLI_PATH;
  const int ra = std::system((cli + " verify --m 2 --jobs 1 --out " + a.string() + " 2>/dev/null").c_str());
  const int rb = std::system((cli + " verify --m 2 --jobs 8 --out " + b.string() + " 2>/dev/null").c_str());
  o.require(ra == 0 && rb == 0, "both runs exit 0");
  const std::string ja = slurp(a);
  const std::string jb = slurp(b);
  o.require(!ja.empty() && ja == jb, "byte-identical JSON (" + std::to_string(ja.size()) + " bytes)");
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3},   {4, criterion4},   {5, criterion5},   {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11}, {12, criterion12},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << "criterion " << (id < 10 ? " " : "") << id << ": " << (out.ok ? "PASS" : "FAIL") << "  ("
         << std::fixed;
    line.precision(2);
    line << since(t0) << " s)";
    std::cout << line.str() << '\n';
    for (const auto& n : out.notes) std::cout << "    " << n << '\n';
    std::cout.flush();
    failed += !out.ok;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criterion(s) failed") << '\n';
  return failed == 0 ? 0 : 1;
}
