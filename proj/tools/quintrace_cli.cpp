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

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quintrace/parallel.hpp"
#include "quintrace/report.hpp"

using namespace quintrace;
using nlohmann::ordered_json;

namespace {

struct Common {
  int m = 1;
  int jobs = default_jobs();
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string format = "json";
  std::string out;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json with_header(const std::string& command, const ordered_json& body) {
  ordered_json j = report_header(command);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

void add_m(CLI::App* app, Common& c) {
  app->add_option("--m", c.m, "Extension degree of GF(2^m)")->required()->check(CLI::Range(1, 12));
}
void add_jobs(CLI::App* app, Common& c) {
  app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}
void add_out(CLI::App* app, Common& c) { app->add_option("--out", c.out, "Write to FILE instead of stdout"); }

int cmd_field_table(const Common& c) {
  emit(c.format == "json" ? dump(field_table_json()) : field_table_text(), c.out);
  return 0;
}

int cmd_distribution(const Common& c, const std::string& mode) {
  const CodeSpec spec = CodeSpec::for_degree(c.m);
  WeightDistribution dist;
  if (mode == "theoretical") {
    dist = theoretical_distribution(spec);
  } else if (mode == "enumerated") {
    if (c.m > TraceCode::kMaxDegree || enumeration_cost(spec) > c.budget) {
      std::cerr << "error: enumeration at m=" << c.m << " needs " << enumeration_cost(spec)
                << " trace evaluations, over the budget of " << c.budget
                << "; use --mode theoretical for the closed-form table\n";
      return 2;
    }
    dist = enumerate_distribution(spec, c.jobs, c.budget);
  } else {
    if (c.m != 4) {
      std::cerr << "error: classified mode needs 4 | m with m <= 4, got m=" << c.m << "\n";
      return 2;
    }
    const TraceCode code(c.m);
    std::mt19937_64 rng(c.seed);
    dist = classified_distribution(code, rng, 4, c.jobs).distribution;
  }
  if (c.format == "csv") emit(to_csv(dist), c.out);
  else if (c.format == "table") emit(to_table(dist), c.out);
  else emit(dump(with_header("distribution", to_json(dist))), c.out);
  return 0;
}

int cmd_verify(const Common& c, int samples) {
  VerifyOptions o;
  o.jobs = c.jobs;
  o.seed = c.seed;
  o.budget = c.budget;
  o.samples = samples;
  const auto report = run_verification(c.m, o);
  for (const auto& [stage, secs] : report.timings) {
    std::cerr << "  " << std::left << std::setw(22) << stage << std::right << std::fixed << std::setprecision(3)
              << secs << " s\n";
  }
  if (c.format == "table") {
    std::string text;
    for (const auto& ch : report.checks) {
      text += "[" + to_string(ch.status) + "] " + ch.name + ": " + ch.actual + " (expected " + ch.expected + ")\n";
    }
    emit(text, c.out);
  } else {
    emit(dump(to_json(report)), c.out);
  }
  return report.failed() ? 1 : 0;
}

int cmd_griesmer(const Common& c) {
  ordered_json body = to_json(CodeSpec::for_degree(c.m));
  body["griesmer"] = to_json(is_distance_optimal(CodeSpec::for_degree(c.m)));
  emit(dump(with_header("griesmer", body)), c.out);
  return 0;
}

int cmd_dual(const Common& c, unsigned cap) {
  const TraceCode code(c.m);
  ordered_json body = to_json(code.spec());
  body["dual"] = to_json(dual_distance(code.generator_matrix(), cap));
  emit(dump(with_header("dual", body)), c.out);
  return 0;
}

int cmd_minimal(const Common& c, std::uint64_t pair_budget) {
  const CodeSpec spec = CodeSpec::for_degree(c.m);
  MinimalityReport r;
  if (c.m <= TraceCode::kMaxDegree) {
    const TraceCode code(c.m);
    const auto cost = Integer(code.ring().element_count()) * code.ring().element_count() * ((code.gray_length() + 63) / 64);
    if (cost <= pair_budget) {
      r = minimal_codewords(code, c.jobs, pair_budget);
    } else {
      std::cerr << "note: pairwise scan needs " << cost << " word operations; reporting the weight condition only\n";
      r = ab_condition(c.m <= 3 ? enumerate_distribution(spec, c.jobs, c.budget) : theoretical_distribution(spec));
    }
  } else {
    r = ab_condition(theoretical_distribution(spec));
  }
  ordered_json body = to_json(spec);
  body["minimality"] = to_json(r);
  emit(dump(with_header("minimal", body)), c.out);
  return 0;
}

std::string bits_of(const BitVector& v) {
  std::string s(v.size(), '0');
  for (std::size_t i = 0; i < v.size(); ++i) s[i] = v.get(i) ? '1' : '0';
  return s;
}

int cmd_sss_demo(const Common& c, int secret) {
  const TraceCode code(c.m);
  const MasseyScheme scheme = MasseyScheme::for_code(code);
  std::mt19937_64 rng(c.seed);
  const ShareDeal deal = scheme.deal(secret != 0, rng);

  ordered_json body = to_json(code.spec());
  body["seed"] = std::to_string(c.seed);
  body["secret"] = secret;
  body["message"] = std::to_string(deal.message);
  body["shareCount"] = std::to_string(deal.share_count());
  if (deal.codeword.size() <= 4096) body["codeword"] = bits_of(deal.codeword);
  body["codewordWeight"] = std::to_string(deal.codeword.weight());

  ordered_json recovery;
  const auto dup = scheme.duplicate_of_secret_column();
  if (dup) {
    const std::size_t coalition[] = {*dup};
    const auto rel = scheme.find_recovery(coalition);
    if (rel) {
      ordered_json support = ordered_json::array();
      for (const auto j : rel->support) support.push_back(std::to_string(j));
      recovery["coalition"] = support;
      recovery["relation"] = "secret = sum of shares at the listed coordinates";
      recovery["recovered"] = static_cast<int>(scheme.reconstruct(deal, *rel));
    }
  }
  recovery["emptyCoalitionRecovers"] = scheme.find_recovery({}).has_value();
  body["recovery"] = recovery;
  try {
    body["classification"] = to_string(scheme.classify());
  } catch (const std::domain_error& e) {
    body["classification"] = std::string("undefined: ") + e.what();
  }
  emit(dump(with_header("sss demo", body)), c.out);
  const bool ok = recovery.contains("recovered") && recovery["recovered"] == secret;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace codes over the quintic ring GF(2^m)[v]/(v^5 - 1)"};
  app.require_subcommand(1);
  Common c;

  auto* field = app.add_subcommand("field-table", "Moduli and generators for m = 1..12");
  field->add_option("--format", c.format)->check(CLI::IsMember({"json", "table"}));
  add_out(field, c);

  std::string mode = "enumerated";
  auto* dist = app.add_subcommand("distribution", "Weight distribution of the Gray image");
  add_m(dist, c);
  dist->add_option("--mode", mode)->check(CLI::IsMember({"enumerated", "theoretical", "classified"}));
  dist->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv", "table"}));
  add_out(dist, c);
  add_jobs(dist, c);
  dist->add_option("--seed", c.seed);
  dist->add_option("--budget", c.budget, "Maximum trace evaluations for enumeration");

  int samples = 10000;
  auto* verify = app.add_subcommand("verify", "Run every applicable check for one m");
  add_m(verify, c);
  verify->add_option("--format", c.format)->check(CLI::IsMember({"json", "table"}));
  add_out(verify, c);
  add_jobs(verify, c);
  verify->add_option("--seed", c.seed);
  verify->add_option("--budget", c.budget);
  verify->add_option("--samples", samples, "Random elements for the weight identity")->check(CLI::PositiveNumber);

  auto* gri = app.add_subcommand("griesmer", "Griesmer bound at the published minimum distance");
  add_m(gri, c);
  add_out(gri, c);

  unsigned cap = 3;
  auto* dual = app.add_subcommand("dual", "Dual distance with a certifying column set");
  dual->add_option("--m", c.m)->required()->check(CLI::Range(1, TraceCode::kMaxDegree));
  dual->add_option("--cap", cap)->check(CLI::Range(1, 6));
  add_out(dual, c);

  std::uint64_t pair_budget = kDefaultMinimalityBudget;
  auto* minimal = app.add_subcommand("minimal", "Minimal codewords by weight condition and brute force");
  add_m(minimal, c);
  add_out(minimal, c);
  add_jobs(minimal, c);
  minimal->add_option("--budget", c.budget);
  minimal->add_option("--pair-budget", pair_budget, "Maximum word operations for the pairwise scan");

  int secret = 0;
  auto* sss = app.add_subcommand("sss", "Massey secret sharing on the Gray image");
  sss->require_subcommand(1);
  auto* demo = sss->add_subcommand("demo", "Deal one bit and recover it from a coalition");
  demo->add_option("--m", c.m)->required()->check(CLI::Range(1, TraceCode::kMaxDegree));
  demo->add_option("--secret", secret)->check(CLI::IsMember({0, 1}));
  demo->add_option("--seed", c.seed);
  add_out(demo, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*field) return cmd_field_table(c);
    if (*dist) return cmd_distribution(c, mode);
    if (*verify) return cmd_verify(c, samples);
    if (*gri) return cmd_griesmer(c);
    if (*dual) return cmd_dual(c, cap);
    if (*minimal) return cmd_minimal(c, pair_budget);
    if (*demo) return cmd_sss_demo(c, secret);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
