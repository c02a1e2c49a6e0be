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

#ifndef QUINTRACE_REPORT_HPP
#define QUINTRACE_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quintrace/analysis.hpp"
#include "quintrace/sss.hpp"
#include "quintrace/trace_codes.hpp"

namespace quintrace {

inline constexpr const char* kLibraryVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "quintrace.report/1";
inline constexpr const char* kUnitOrderVersion = "packed-ascending/c4..c0/1";

/// FNV-1a over the modulus table, as 16 hex digits.
std::string modulus_table_hash();

/// Fields every JSON document starts with: schema, library version,
/// modulus table hash, unit order version, and the producing command.
nlohmann::ordered_json report_header(const std::string& command);

nlohmann::ordered_json to_json(const CodeSpec& spec);
nlohmann::ordered_json to_json(const WeightDistribution& dist);
std::string to_csv(const WeightDistribution& dist);
std::string to_table(const WeightDistribution& dist);

nlohmann::ordered_json to_json(const GriesmerReport& r);
nlohmann::ordered_json to_json(const DualDistanceReport& r);
nlohmann::ordered_json to_json(const MinimalityReport& r, std::size_t max_witnesses = 16);
nlohmann::ordered_json to_json(const TableAdjudication& adj);

nlohmann::ordered_json field_table_json();
std::string field_table_text();

enum class CheckStatus { Pass, Fail, DiscrepancyLogged };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  std::string claim_ref;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Pass;
};

struct VerificationReport {
  int m = 0;
  ParityClass parity = ParityClass::Odd;
  std::vector<Check> checks;
  /// Wall-clock seconds per stage; printed to stderr, never serialized.
  std::vector<std::pair<std::string, double>> timings;

  bool failed() const;
  const Check* find(const std::string& name) const;
};

struct VerifyOptions {
  int jobs = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  int samples = 10000;
};

/// Runs every check applicable to m: enumeration-backed ones for m <= 4,
/// formula-only ones for any m <= 12.
VerificationReport run_verification(int m, const VerifyOptions& options);

nlohmann::ordered_json to_json(const VerificationReport& r);

}  // namespace quintrace

#endif  // QUINTRACE_REPORT_HPP
