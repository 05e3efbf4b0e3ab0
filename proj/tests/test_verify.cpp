// Copyright 2026 The globent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>
#include <stdexcept>

#include "catch_amalgamated.hpp"
#include "globent/verify.hpp"
#include "json.hpp"

namespace globent {
namespace test_verify {

using Catch::Matchers::WithinAbs;

SuiteConfig small(unsigned trials = 10) {
  SuiteConfig c;
  c.trials = trials;
  c.n_max = 6;
  return c;
}

const PropertyRecord& find(const SuiteReport& r, const std::string& name) {
  auto it = std::find_if(r.records.begin(), r.records.end(),
                         [&](const PropertyRecord& p) { return p.name == name; });
  REQUIRE(it != r.records.end());
  return *it;
}

TEST_CASE("trial_seed") {
  CHECK(trial_seed(42, "a", 0) == trial_seed(42, "a", 0));
  CHECK(trial_seed(42, "a", 0) != trial_seed(42, "a", 1));
  CHECK(trial_seed(42, "a", 0) != trial_seed(42, "b", 0));
  CHECK(trial_seed(42, "a", 0) != trial_seed(43, "a", 0));
}

TEST_CASE("five-qubit AME state") {
  const auto s = ame_five_qubit_state();
  CHECK(s.num_qubits() == 5);
  CHECK(is_ame(s));
  CHECK_THAT(e_ad(s), WithinAbs(1.0, 1e-12));
  CHECK_THAT(e_ad_global(s), WithinAbs(1.0, 1e-10));
}

TEST_CASE("config validation") {
  SuiteConfig c;
  c.n_max = 1;
  CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
  c.n_max = 13;
  CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
  c.n_min = 5;
  c.n_max = 4;
  CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
  c.n_min = 1;
  c.n_max = 4;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("individual checks") {
  const auto cfg = small(20);
  CHECK(check_decomposition_law(cfg).passed);
  CHECK(check_lu_invariance(cfg).passed);
  CHECK(check_wedge_determinant_equivalence(cfg).passed);
  CHECK(check_mixedness(cfg).passed);
  const auto examples = check_examples(cfg);
  REQUIRE(examples.size() == 5);
  for (const auto& r : examples) {
    INFO(r.name << " residual " << r.max_residual);
    CHECK(r.passed);
  }
  const auto lu = check_lu_invariance(cfg);
  CHECK(lu.trials == 20);
  CHECK(lu.max_residual <= 1e-10);
  CHECK(lu.worst_seed.has_value());
}

TEST_CASE("empty suite") {
  const auto r = run_suite(small(0));
  CHECK(r.records.empty());
  CHECK(r.passed);
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["properties"].empty());
  CHECK(j["passed"] == true);
}

TEST_CASE("zero tolerance inverts every property") {
  auto cfg = small(3);
  cfg.tolerances["*"] = 0.0;
  const auto r = run_suite(cfg);
  CHECK_FALSE(r.passed);
  for (const auto& p : r.records) {
    INFO(p.name);
    CHECK_FALSE(p.passed);
    CHECK(p.tolerance == 0.0);
  }
}

TEST_CASE("named override beats the wildcard") {
  auto cfg = small(3);
  cfg.tolerances["*"] = 1.0;
  cfg.tolerances["lu_invariance"] = 0.0;
  const auto r = run_suite(cfg);
  CHECK_FALSE(r.passed);
  for (const auto& p : r.records) {
    INFO(p.name);
    CHECK(p.passed == (p.name != "lu_invariance"));
  }
}

TEST_CASE("determinism across runs and thread counts") {
  auto cfg = small(8);
  cfg.threads = 1;
  const auto a = to_json(run_suite(cfg), false);
  cfg.threads = 4;
  const auto b = to_json(run_suite(cfg), false);
  CHECK(a == b);
  cfg.seed = 7;
  CHECK(to_json(run_suite(cfg), false) != a);
}

TEST_CASE("json layout") {
  const auto r = run_suite(small(2));
  const auto j = nlohmann::ordered_json::parse(to_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"config", "passed", "properties", "wall_seconds"});
  const auto& first = j["properties"][0];
  std::vector<std::string> fields;
  for (const auto& [k, v] : first.items()) fields.push_back(k);
  CHECK(fields == std::vector<std::string>{"name", "anchors", "trials", "max_residual",
                                           "tolerance", "violations", "passed",
                                           "worst_seed"});
  CHECK_FALSE(nlohmann::json::parse(to_json(r, false)).contains("wall_seconds"));
}

TEST_CASE("every anchor is covered", "[audit]") {
  const auto r = run_suite(small(1));
  std::set<std::string> seen;
  for (const auto& p : r.records) seen.insert(p.anchors.begin(), p.anchors.end());
  for (const auto& a : required_anchors()) {
    INFO(a);
    CHECK(seen.count(a) == 1);
  }
  std::set<std::string> names;
  for (const auto& p : r.records) names.insert(p.name);
  CHECK(names.size() == r.records.size());
}

TEST_CASE("default suite passes", "[gate]") {
  const auto r = run_suite(SuiteConfig{});
  for (const auto& p : r.records) {
    INFO(p.name << " residual " << p.max_residual << " tol " << p.tolerance
                << " violations " << p.violations);
    CHECK(p.passed);
  }
  CHECK(r.passed);
}

}  // namespace test_verify
}  // namespace globent
