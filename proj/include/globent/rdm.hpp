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

#include <Eigen/Dense>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "globent/state.hpp"

namespace globent {

/// Largest subsystem handled by the partial trace (12 qubits, d = 4096).
inline constexpr unsigned kMaxKeptQubits = 12;

/**
 * Reduced density matrix of a subset of qubits.
 *
 * The kept qubits are listed in increasing order; the first kept qubit is
 * the most significant bit of the row/column index.
 */
class DensityMatrix {
 public:
  /// Validates Hermiticity and unit trace (1e-10) and PSD (eigenvalues >=
  /// -1e-9). An empty kept list defaults to qubits 1..log2(d).
  static DensityMatrix from_matrix(
      Eigen::MatrixXcd entries, std::vector<unsigned> kept_qubits = {});

  const std::vector<unsigned>& kept_qubits() const noexcept { return kept_; }
  Eigen::Index dimension() const noexcept { return entries_.rows(); }
  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }
  Complex operator()(Eigen::Index row, Eigen::Index col) const {
    return entries_(row, col);
  }

 private:
  DensityMatrix(Eigen::MatrixXcd entries, std::vector<unsigned> kept)
      : kept_(std::move(kept)), entries_(std::move(entries)) {}

  friend DensityMatrix reduce(const StateVector&, std::span<const unsigned>);
  friend DensityMatrix reduce_naive_oracle(
      const StateVector&, std::span<const unsigned>);

  std::vector<unsigned> kept_;
  Eigen::MatrixXcd entries_;
};

/// Partial trace onto `keep` (strictly increasing, 1-based). Blocked
/// bit-mask kernel: rho += B B^H over blocks of gathered amplitude columns.
DensityMatrix reduce(const StateVector& state, std::span<const unsigned> keep);
inline DensityMatrix reduce(
    const StateVector& state, std::initializer_list<unsigned> keep) {
  return reduce(state, std::span<const unsigned>(keep.begin(), keep.size()));
}

/// Direct index-summation partial trace. Slow; exists as a test oracle.
DensityMatrix reduce_naive_oracle(
    const StateVector& state, std::span<const unsigned> keep);
inline DensityMatrix reduce_naive_oracle(
    const StateVector& state, std::initializer_list<unsigned> keep) {
  return reduce_naive_oracle(
      state, std::span<const unsigned>(keep.begin(), keep.size()));
}

/// Eigenvalues of (rho + rho^H)/2, sorted descending.
std::vector<double> eigenvalues(const DensityMatrix& dm);

/// Determinant; closed form ad - |b|^2 for d = 2, eigenvalue product
/// otherwise. Roundoff negatives down to -1e-9 are clamped to zero.
double det_hermitian(const DensityMatrix& dm);

struct Moments {
  double trace_rho2 = 0.0;
  double trace_rho3 = 0.0;
};

Moments moments(const DensityMatrix& dm);

/// Max-norm distance to the maximally mixed state I/d.
double distance_from_maximally_mixed(const DensityMatrix& dm);

}  // namespace globent
