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

#include <doctest.h>

#include "quintrace/report.hpp"

using namespace quintrace;

TEST_CASE("distribution JSON") {
  const auto j = to_json(theoretical_distribution(CodeSpec::for_degree(1)));
  CHECK(j["m"] == 1);
  CHECK(j["parityClass"] == "odd");
  CHECK(j["L"] == "15");
  CHECK(j["s"] == "75");
  CHECK(j["provenance"] == "theoretical");
  REQUIRE(j["entries"].size() == 4);
  CHECK(j["entries"][1]["weight"] == "35");
  CHECK(j["entries"][1]["frequency"] == "15");
}

TEST_CASE("large integers stay exact") {
  const auto j = to_json(theoretical_distribution(CodeSpec::for_degree(11)));
  CHECK(j["s"].is_string());
  CHECK(j["s"].get<std::string>() == CodeSpec::for_degree(11).gray_length.str());
  const auto g = to_json(is_distance_optimal(CodeSpec::for_degree(9)));
  CHECK(g["optimal"] == true);
  CHECK(g["N"].is_string());
}

TEST_CASE("CSV and table output") {
  const auto d = theoretical_distribution(CodeSpec::for_degree(1));
  CHECK(to_csv(d) == "weight,frequency\n0,1\n35,15\n40,15\n75,1\n");
  CHECK(to_table(d).find("provenance=theoretical") != std::string::npos);
}

TEST_CASE("report header") {
  const auto h = report_header("distribution");
  CHECK(h["schema"] == kSchemaVersion);
  CHECK(h["library"] == kLibraryVersion);
  CHECK(h["unitOrder"] == kUnitOrderVersion);
  CHECK(h["modulusTableHash"].get<std::string>().size() == 16);
  CHECK(modulus_table_hash() == modulus_table_hash());
}

TEST_CASE("field table") {
  const auto j = field_table_json();
  REQUIRE(j["fields"].size() == 12);
  CHECK(j["fields"][3]["modulus"] == "x^4+x+1");
  CHECK(j["fields"][3]["modulusHex"] == "0x13");
  for (const auto& row : j["fields"]) CHECK(row["irreducible"] == true);
}

TEST_CASE("verification at m=1") {
  VerifyOptions o;
  o.samples = 200;
  const auto r = run_verification(1, o);
  CHECK_FALSE(r.failed());
  CHECK(r.find("dual-distance") != nullptr);
  CHECK(r.find("dual-distance")->status == CheckStatus::Pass);
  CHECK(r.find("ab-condition")->status == CheckStatus::Pass);
  CHECK(r.find("no-such-check") == nullptr);
  CHECK_FALSE(r.timings.empty());

  const auto j = to_json(r);
  CHECK_FALSE(j.contains("timings"));
  CHECK(j["summary"]["fail"] == 0);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("claimRef"));
    CHECK(c["status"] != "fail");
  }
}

TEST_CASE("verification with formulas only") {
  const auto r = run_verification(7, VerifyOptions{});
  CHECK_FALSE(r.failed());
  REQUIRE(r.find("griesmer-optimal") != nullptr);
  CHECK(r.find("griesmer-optimal")->status == CheckStatus::Pass);
  CHECK(r.find("dual-distance") == nullptr);

  const auto r8 = run_verification(8, VerifyOptions{});
  CHECK(r8.find("first-moment-published")->status == CheckStatus::DiscrepancyLogged);
  CHECK_FALSE(r8.failed());
  CHECK_THROWS_AS(run_verification(13, VerifyOptions{}), std::out_of_range);
}

TEST_CASE("verification at m=2 flags the stated length") {
  VerifyOptions o;
  o.samples = 500;
  const auto r = run_verification(2, o);
  CHECK_FALSE(r.failed());
  REQUIRE(r.find("worked-example-m2-length") != nullptr);
  CHECK(r.find("worked-example-m2-length")->status == CheckStatus::DiscrepancyLogged);
  CHECK(r.find("worked-example-m2-length")->actual == "3375");
  CHECK(r.find("sss-classification")->actual == "dictatorial");
}
