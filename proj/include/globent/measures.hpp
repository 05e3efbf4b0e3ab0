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

#include <optional>
#include <utility>
#include <vector>

#include "globent/rdm.hpp"
#include "globent/state.hpp"
#include "globent/wedge.hpp"

namespace globent {

// ---------------------------------------------------------------------------
// Average-determinant measure and its per-qubit pieces

/// (4/n) sum_i det rho_i over single-qubit reduced density matrices.
double e_ad(const StateVector& state);

/// 1-tangles tau_i = 4 det rho_i, one per qubit.
std::vector<double> one_tangles(const StateVector& state);

/// det rho_1 straight from the amplitudes:
/// sum_{i<j} |c_i c_{h+j} - c_j c_{h+i}|^2 with h = 2^(n-1). Requires n >= 2.
double closed_form_det_rho1(const StateVector& state);

// ---------------------------------------------------------------------------
// Entropies

/// 2 (1 - Tr rho^2) for a single-qubit density matrix.
double linear_entropy(const DensityMatrix& dm);

/// -sum eta ln eta; eigenvalues below 1e-12 contribute zero.
double von_neumann(const DensityMatrix& dm);

/// |2 S(rho_i) - (2 ln 2 - 1 + 4 det rho_i)| for each qubit.
std::vector<double> taylor_residuals(const StateVector& state);
double taylor_residual(const StateVector& state);
/// Same gap for one single-qubit density matrix.
double taylor_residual(const DensityMatrix& dm);

// ---------------------------------------------------------------------------
// Concurrence and tangles

/// 2 |c_0 c_3 - c_1 c_2| for a two-qubit pure state.
double concurrence_pure_2q(const StateVector& state);

/**
 * Wootters concurrence max(0, l1 - l2 - l3 - l4) of a two-qubit density
 * matrix, with l_k the descending square roots of the spectrum of
 * rho (Y x Y) rho* (Y x Y).
 *
 * The l_k are computed as singular values of the symmetric matrix
 * W^T (Y x Y) W, where rho = W W^H is the eigen-decomposition with the
 * square roots folded into W. That avoids taking a square root of a
 * roundoff-level eigenvalue of the spin-flipped product.
 */
double concurrence_mixed_2q(const DensityMatrix& dm);

struct ThreeQubitTangles {
  double tau12 = 0.0;
  double tau13 = 0.0;
  double tau23 = 0.0;
  double tau123 = 0.0;
};

/// Two-tangles from the Wootters concurrence and the residual three-tangle
/// tau_123 = 4 det rho_1 - tau_12 - tau_13. Requires n = 3.
ThreeQubitTangles three_qubit_tangles(const StateVector& state);
double three_tangle(const StateVector& state);

// ---------------------------------------------------------------------------
// Subset generalization

/**
 * Average over all C(n, l) l-qubit subsets of mu * det rho_S, mu = d^d with
 * d = 2^l, so a maximally mixed rho_S scores exactly 1. Requires
 * 1 <= l <= n/2 and l <= 12.
 */
double e_ad_subset(const StateVector& state, unsigned level);

/// Mean of e_ad_subset over l = 1..floor(n/2). Requires n >= 2.
double e_ad_global(const StateVector& state);

/// True iff every reduced state on at most n/2 qubits is within `tol`
/// (max-norm) of I/d. Requires n >= 2.
bool is_ame(const StateVector& state, double tol = 1e-10);

/// All l-element subsets of {1..n} in lexicographic order.
std::vector<std::vector<unsigned>> qubit_subsets(unsigned n, unsigned level);

// ---------------------------------------------------------------------------
// Aggregate report

struct ReportOptions {
  bool tangles = false;
  /// 0 disables subset levels; otherwise levels 1..min(L, n/2) are listed and
  /// e_ad_global is filled when L >= n/2.
  unsigned subset_levels = 0;
  WedgeMethod wedge = WedgeMethod::kAuto;
};

struct MeasureReport {
  unsigned n = 0;
  double e_ad = 0.0;
  double e_mw = 0.0;
  std::vector<double> one_tangles;
  double avg_linear_entropy = 0.0;
  double avg_von_neumann = 0.0;
  double taylor_residual = 0.0;
  std::optional<ThreeQubitTangles> tangles;
  std::vector<std::pair<unsigned, double>> e_ad_levels;
  std::optional<double> e_ad_global;
};

MeasureReport full_report(const StateVector& state, const ReportOptions& options = {});

}  // namespace globent
