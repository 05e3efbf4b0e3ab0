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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace globent {

using Complex = std::complex<double>;
using Unitary2 = Eigen::Matrix2cd;

inline constexpr unsigned kMaxQubits = 24;

/// Qubits are numbered 1..n. Qubit 1 is the most significant bit of the
/// amplitude index, so qubit k occupies bit position n - k.
constexpr std::size_t qubit_bit(unsigned num_qubits, unsigned qubit) {
  return std::size_t{1} << (num_qubits - qubit);
}

/**
 * Normalized pure state of n qubits.
 *
 * Instances are immutable. The constructor enforces length 2^n and unit norm
 * within 1e-12; use from_amplitudes() for input that may need rescaling.
 */
class StateVector {
 public:
  StateVector(unsigned num_qubits, std::vector<Complex> amplitudes);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  bool operator==(const StateVector&) const = default;

 private:
  unsigned num_qubits_;
  std::vector<Complex> amplitudes_;
};

double norm_squared(std::span<const Complex> v);

/// Builds a state from raw amplitudes. With normalize=false the input must
/// already have unit norm within 1e-9; deviations above 1e-12 are rescaled,
/// smaller ones are kept verbatim.
StateVector from_amplitudes(
    unsigned num_qubits, std::vector<Complex> amplitudes, bool normalize);

/// Kronecker product, first factor on the most significant qubits.
StateVector tensor(const StateVector& first, const StateVector& second);

// ---------------------------------------------------------------------------
// State families

struct BasisFamily {
  unsigned n = 1;
  std::uint64_t index = 0;
};
struct BellFamily {};
struct GhzFamily {
  unsigned n = 3;
};
/// alpha|0...0> + beta|1...1>, normalized after construction.
struct GhzLikeFamily {
  unsigned n = 3;
  double alpha = 0.0;
  double beta = 0.0;
};
struct WFamily {
  unsigned n = 3;
};
enum class ClusterSign { kPlus, kMinus };
/// (|0..0>|0..0> + |0..0>|1..1> + |1..1>|0..0> +- |1..1>|1..1>) / 2 over
/// the two halves of an even register.
struct ClusterFamily {
  unsigned n = 4;
  ClusterSign sign = ClusterSign::kPlus;
};
/**
 * Symmetric complement-paired state on even n >= 4. Each key is a canonical
 * representative bitstring s (first bit 0, either all zeros or exactly n/2
 * ones) and contributes c_s (|s> + |~s>). Normalized after assembly.
 */
struct GFamily {
  unsigned n = 4;
  std::vector<std::pair<std::string, Complex>> coefficients;
};
struct ProductFamily {
  std::vector<StateVector> factors;
};

using FamilySpec = std::variant<
    BasisFamily, BellFamily, GhzFamily, GhzLikeFamily, WFamily, ClusterFamily,
    GFamily, ProductFamily>;

StateVector build_family(const FamilySpec& spec);

/// Canonical G-state representatives for even n, in increasing index order.
std::vector<std::string> g_state_representatives(unsigned n);

// ---------------------------------------------------------------------------
// Random ensembles

/// Haar-uniform pure state: i.i.d. complex Gaussians, normalized.
StateVector haar_random_state(unsigned num_qubits, std::uint64_t seed);

/// Haar-uniform 2x2 unitary as global phase x (phase, rotation, phase).
Unitary2 haar_unitary(std::uint64_t seed);

// ---------------------------------------------------------------------------
// Transformations

bool is_unitary(const Unitary2& u, double tol = 1e-10);

/// Applies us[0] (x) us[1] (x) ... (x) us[n-1]; us[k-1] acts on qubit k.
StateVector apply_local_unitaries(
    const StateVector& state, std::span<const Unitary2> us);

/// |psi> = |0>_k |u> + |1>_k |v>.
struct ProjectionPair {
  unsigned qubit = 1;
  std::vector<Complex> u;
  std::vector<Complex> v;
};

ProjectionPair project_qubit(const StateVector& state, unsigned qubit);

/// Inverse of project_qubit: interleaves u and v back by bit k.
std::vector<Complex> reassemble(const ProjectionPair& pair);

}  // namespace globent
