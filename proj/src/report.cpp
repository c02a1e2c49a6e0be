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

#include "quintrace/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace quintrace {

using nlohmann::ordered_json;

std::string modulus_table_hash() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Gf2Poly p : modulus_table()) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (p >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json report_header(const std::string& command) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["library"] = kLibraryVersion;
  j["modulusTableHash"] = modulus_table_hash();
  j["unitOrder"] = kUnitOrderVersion;
  j["command"] = command;
  return j;
}

ordered_json to_json(const CodeSpec& spec) {
  ordered_json j;
  j["m"] = spec.m;
  j["parityClass"] = to_string(spec.parity);
  j["L"] = spec.length.str();
  j["s"] = spec.gray_length.str();
  j["dimension"] = spec.dimension;
  return j;
}

ordered_json to_json(const WeightDistribution& dist) {
  ordered_json j = to_json(dist.spec);
  j["provenance"] = to_string(dist.provenance);
  ordered_json entries = ordered_json::array();
  for (const auto& [w, f] : dist.entries) entries.push_back({{"weight", w.str()}, {"frequency", f.str()}});
  j["entries"] = std::move(entries);
  return j;
}

std::string to_csv(const WeightDistribution& dist) {
  std::ostringstream out;
  out << "weight,frequency\n";
  for (const auto& [w, f] : dist.entries) out << w << ',' << f << '\n';
  return out.str();
}

std::string to_table(const WeightDistribution& dist) {
  std::size_t ww = 6;
  std::size_t fw = 9;
  for (const auto& [w, f] : dist.entries) {
    ww = std::max(ww, w.str().size());
    fw = std::max(fw, f.str().size());
  }
  std::ostringstream out;
  out << "m=" << dist.spec.m << " (" << to_string(dist.spec.parity) << ")  L=" << dist.spec.length
      << "  s=" << dist.spec.gray_length << "  dimension=" << dist.spec.dimension
      << "  provenance=" << to_string(dist.provenance) << '\n';
  out << std::setw(static_cast<int>(ww)) << "weight" << "  " << std::setw(static_cast<int>(fw)) << "frequency" << '\n';
  for (const auto& [w, f] : dist.entries) {
    out << std::setw(static_cast<int>(ww)) << w.str() << "  " << std::setw(static_cast<int>(fw)) << f.str() << '\n';
  }
  return out.str();
}

ordered_json to_json(const GriesmerReport& r) {
  ordered_json j;
  j["m"] = r.m;
  j["N"] = r.n.str();
  j["K"] = std::to_string(r.k);
  j["d"] = r.d.str();
  j["griesmerSumAtDPlus1"] = r.sum_at_d_plus_1.str();
  j["slack"] = r.slack.str();
  j["optimal"] = r.optimal;
  j["claimApplies"] = r.claim_applies;
  return j;
}

ordered_json to_json(const DualDistanceReport& r) {
  ordered_json j;
  j["rank"] = std::to_string(r.rank);
  j["columns"] = std::to_string(r.columns);
  j["cap"] = std::to_string(r.cap);
  if (r.dual_trivial) j["distance"] = "undefined";
  else if (r.distance) j["distance"] = std::to_string(*r.distance);
  else j["distance"] = "> " + std::to_string(r.cap);
  ordered_json cert = ordered_json::array();
  for (const auto c : r.certificate) cert.push_back(std::to_string(c));
  j["certificateColumns"] = std::move(cert);
  j["zeroColumnAbsent"] = r.zero_column_absent;
  return j;
}

ordered_json to_json(const MinimalityReport& r, std::size_t max_witnesses) {
  ordered_json j;
  j["w0"] = r.w0.str();
  j["wInf"] = r.w_inf.str();
  j["abRatioHolds"] = r.ab_holds;
  if (r.brute_force) {
    const auto& bf = *r.brute_force;
    ordered_json b;
    b["nonzeroCodewords"] = std::to_string(bf.nonzero_codewords);
    b["minimalCount"] = std::to_string(bf.minimal_count);
    b["nonMinimalCount"] = std::to_string(bf.witnesses.size());
    ordered_json w = ordered_json::array();
    for (std::size_t i = 0; i < bf.witnesses.size() && i < max_witnesses; ++i) {
      w.push_back({{"codeword", std::to_string(bf.witnesses[i].codeword)},
                   {"covers", std::to_string(bf.witnesses[i].covered)}});
    }
    b["witnesses"] = std::move(w);
    j["bruteForce"] = std::move(b);
  }
  return j;
}

ordered_json to_json(const TableAdjudication& adj) {
  ordered_json j;
  ordered_json rows = ordered_json::array();
  for (const auto& r : adj.rows) {
    rows.push_back({{"nonzeroComponents", r.nonzero},
                    {"classSize", r.size.str()},
                    {"measuredWeight", std::to_string(r.measured)},
                    {"characterSumWeight", r.character_sum_weight.str()},
                    {"caseAnalysisWeight", r.proof_weight.str()},
                    {"printedRow", r.printed_row},
                    {"printedWeight", r.printed_weight.str()},
                    {"printedPairHolds", r.printed_pair_holds}});
  }
  j["classes"] = std::move(rows);
  j["printedPairingHolds"] = adj.printed_pairing_holds;
  j["row1Row4SwapHolds"] = adj.row1_row4_swap_holds;
  j["caseAnalysisWeightsHold"] = adj.proof_weights_hold;
  j["characterSumWeightsHold"] = adj.character_sum_weights_hold;
  j["verdict"] = adj.verdict;
  return j;
}

ordered_json field_table_json() {
  ordered_json rows = ordered_json::array();
  for (int m = 1; m <= FieldContext::kMaxDegree; ++m) {
    const FieldContext f(m);
    char hex[16];
    std::snprintf(hex, sizeof hex, "0x%x", f.modulus());
    rows.push_back({{"m", m},
                    {"modulus", poly_to_string(f.modulus())},
                    {"modulusHex", hex},
                    {"irreducible", is_irreducible(f.modulus())},
                    {"generator", poly_to_string(f.generator())},
                    {"traceMask", std::to_string(f.trace_mask())}});
  }
  ordered_json j = report_header("field-table");
  j["fields"] = std::move(rows);
  return j;
}

std::string field_table_text() {
  std::ostringstream out;
  out << " m  modulus                 generator   irreducible\n";
  for (int m = 1; m <= FieldContext::kMaxDegree; ++m) {
    const FieldContext f(m);
    out << std::setw(2) << m << "  " << std::left << std::setw(22) << poly_to_string(f.modulus()) << "  "
        << std::setw(10) << poly_to_string(f.generator()) << "  " << (is_irreducible(f.modulus()) ? "yes" : "NO")
        << std::right << '\n';
  }
  out << "table hash " << modulus_table_hash() << '\n';
  return out.str();
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::DiscrepancyLogged:
      return "discrepancy-logged";
  }
  return "unknown";
}

bool VerificationReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j = report_header("verify");
  j["m"] = r.m;
  j["parityClass"] = to_string(r.parity);
  ordered_json checks = ordered_json::array();
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t logged = 0;
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"claimRef", c.claim_ref},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"status", to_string(c.status)}});
    (c.status == CheckStatus::Pass ? pass : c.status == CheckStatus::Fail ? fail : logged) += 1;
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"discrepancyLogged", logged}};
  return j;
}

}  // namespace quintrace
