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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "globent/measures.hpp"

namespace globent {

/**
 * Property-suite parameters. Random trials draw n uniformly from
 * [n_min, n_max]; tolerance overrides are keyed by property name, and
 * the key "*" applies to every property without its own entry.
 */
struct SuiteConfig {
  std::uint64_t seed = 42;
  unsigned trials = 200;
  unsigned n_min = 2;
  unsigned n_max = 8;
  std::map<std::string, double> tolerances;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

/// Throws std::invalid_argument unless 2 <= n_min <= n_max <= 12.
void validate(const SuiteConfig& config);

/**
 * One property's outcome. A record passes when max_residual < tolerance
 * and no structural (boolean) check was violated.
 */
struct PropertyRecord {
  std::string name;
  std::vector<std::string> anchors;
  unsigned trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  unsigned violations = 0;
  bool passed = false;
  /// Trial seed at the worst residual or first violation; empty when the
  /// worst case came from a fixed (non-random) case.
  std::optional<std::uint64_t> worst_seed;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<PropertyRecord> records;
  bool passed = true;
  double wall_seconds = 0.0;
};

/// hash(seed, name, index) used for every random trial.
std::uint64_t trial_seed(std::uint64_t seed, std::string_view name, std::uint64_t index);

/// Logical zero of the five-qubit perfect code; every 2-qubit marginal is I/4.
StateVector ame_five_qubit_state();

PropertyRecord check_decomposition_law(const SuiteConfig& config);
PropertyRecord check_single_factor_bound(const SuiteConfig& config);
PropertyRecord check_maximal_value_factors(const SuiteConfig& config);
PropertyRecord check_one_tangle_average(const SuiteConfig& config);
PropertyRecord check_mixedness(const SuiteConfig& config);
PropertyRecord check_range_and_separability(const SuiteConfig& config);
PropertyRecord check_lu_invariance(const SuiteConfig& config);
/// W, GHZ-like, G-state, cluster and AME records, each at its own tolerance.
std::vector<PropertyRecord> check_examples(const SuiteConfig& config);
PropertyRecord check_wedge_determinant_equivalence(const SuiteConfig& config);
PropertyRecord check_qubit_projection(const SuiteConfig& config);
PropertyRecord check_closed_form_determinant(const SuiteConfig& config);
PropertyRecord check_two_qubit_concurrence(const SuiteConfig& config);
PropertyRecord check_three_qubit_decomposition(const SuiteConfig& config);
PropertyRecord check_three_tangle_bound(const SuiteConfig& config);
PropertyRecord check_ghz_lu_orbit(const SuiteConfig& config);
PropertyRecord check_entropy_identities(const SuiteConfig& config);
PropertyRecord check_entropy_expansion(const SuiteConfig& config);
PropertyRecord check_subset_measures(const SuiteConfig& config);

/// Runs every check; trials = 0 yields an empty, passing report.
SuiteReport run_suite(const SuiteConfig& config);

/// Every anchor the suite is expected to cover.
const std::vector<std::string>& required_anchors();

/// Stable-key-order JSON. Timing is omitted when include_timing is false.
std::string to_json(const SuiteReport& report, bool include_timing = true);

}  // namespace globent
