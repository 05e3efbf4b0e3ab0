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

#include "globent/rdm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace globent {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-9;

// Columns gathered per rank update; bounds the scratch block to 32k entries.
constexpr Eigen::Index kBlockEntries = Eigen::Index{1} << 15;

void check_keep(unsigned n, std::span<const unsigned> keep) {
  if (keep.empty()) {
    throw std::invalid_argument("kept-qubit subset is empty");
  }
  if (keep.size() > std::min(n, kMaxKeptQubits)) {
    throw std::invalid_argument(
        "kept-qubit subset too large (max " +
        std::to_string(std::min(n, kMaxKeptQubits)) + ")");
  }
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (keep[t] < 1 || keep[t] > n) {
      throw std::out_of_range("kept qubit " + std::to_string(keep[t]) +
                              " outside 1.." + std::to_string(n));
    }
    if (t > 0 && keep[t] <= keep[t - 1]) {
      throw std::invalid_argument(
          "kept qubits must be strictly increasing and distinct");
    }
  }
}

Eigen::MatrixXcd symmetrized(const Eigen::MatrixXcd& m) {
  return (m + m.adjoint()) * 0.5;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(
    Eigen::MatrixXcd entries, std::vector<unsigned> kept_qubits) {
  const Eigen::Index d = entries.rows();
  if (d < 2 || entries.cols() != d ||
      !std::has_single_bit(static_cast<std::size_t>(d))) {
    throw std::invalid_argument(
        "density matrix must be square with power-of-2 dimension >= 2");
  }
  const auto levels =
      static_cast<unsigned>(std::countr_zero(static_cast<std::size_t>(d)));
  if (levels > kMaxKeptQubits) {
    throw std::invalid_argument("density matrix dimension exceeds 4096");
  }
  if (kept_qubits.empty()) {
    for (unsigned q = 1; q <= levels; ++q) kept_qubits.push_back(q);
  }
  if (kept_qubits.size() != levels) {
    throw std::invalid_argument("kept-qubit list does not match dimension");
  }
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(entries.trace() - Complex(1.0)) > kTraceTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  DensityMatrix dm(std::move(entries), std::move(kept_qubits));
  if (eigenvalues(dm).back() < -kPsdTol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  return dm;
}

DensityMatrix reduce(const StateVector& state, std::span<const unsigned> keep) {
  const unsigned n = state.num_qubits();
  check_keep(n, keep);
  const auto levels = static_cast<unsigned>(keep.size());
  const Eigen::Index d = Eigen::Index{1} << levels;

  // offsets[a]: amplitude-index bits contributed by kept configuration a.
  std::vector<std::size_t> offsets(static_cast<std::size_t>(d), 0);
  std::size_t kept_mask = 0;
  for (unsigned t = 0; t < levels; ++t) kept_mask |= qubit_bit(n, keep[t]);
  for (Eigen::Index a = 0; a < d; ++a) {
    std::size_t off = 0;
    for (unsigned t = 0; t < levels; ++t) {
      if ((a >> (levels - 1 - t)) & 1) off |= qubit_bit(n, keep[t]);
    }
    offsets[static_cast<std::size_t>(a)] = off;
  }
  const std::size_t traced_mask = (state.dimension() - 1) & ~kept_mask;
  const std::size_t traced_count = state.dimension() >> levels;

  const Eigen::Index block_cols = static_cast<Eigen::Index>(std::min<std::size_t>(
      traced_count, static_cast<std::size_t>(std::max<Eigen::Index>(1, kBlockEntries / d))));
  Eigen::MatrixXcd block(d, block_cols);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  const auto amps = state.amplitudes();

  Eigen::Index col = 0;
  std::size_t r = 0;
  do {
    for (Eigen::Index a = 0; a < d; ++a) {
      block(a, col) = amps[r | offsets[static_cast<std::size_t>(a)]];
    }
    if (++col == block_cols) {
      rho.selfadjointView<Eigen::Lower>().rankUpdate(block);
      col = 0;
    }
    // Next submask of traced_mask in increasing order.
    r = (r - traced_mask) & traced_mask;
  } while (r != 0);
  if (col > 0) {
    rho.selfadjointView<Eigen::Lower>().rankUpdate(block.leftCols(col));
  }
  Eigen::MatrixXcd full = rho.selfadjointView<Eigen::Lower>();
  return DensityMatrix(std::move(full),
                       std::vector<unsigned>(keep.begin(), keep.end()));
}

DensityMatrix reduce_naive_oracle(
    const StateVector& state, std::span<const unsigned> keep) {
  const unsigned n = state.num_qubits();
  check_keep(n, keep);
  const auto levels = static_cast<unsigned>(keep.size());
  const std::size_t d = std::size_t{1} << levels;
  const std::size_t traced_count = std::size_t{1} << (n - levels);

  std::vector<unsigned> traced;
  for (unsigned q = 1; q <= n; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
      traced.push_back(q);
    }
  }
  // Bit value of qubit q (1-based) in the full index, built digit by digit.
  auto full_index = [&](std::size_t kept_cfg, std::size_t traced_cfg) {
    std::vector<int> bit_of_qubit(n + 1, 0);
    for (unsigned t = 0; t < levels; ++t) {
      bit_of_qubit[keep[t]] = static_cast<int>((kept_cfg >> (levels - 1 - t)) % 2);
    }
    for (std::size_t t = 0; t < traced.size(); ++t) {
      bit_of_qubit[traced[t]] =
          static_cast<int>((traced_cfg >> (traced.size() - 1 - t)) % 2);
    }
    std::size_t index = 0;
    for (unsigned q = 1; q <= n; ++q) index = index * 2 + bit_of_qubit[q];
    return index;
  };

  Eigen::MatrixXcd rho(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Complex sum = 0.0;
      for (std::size_t r = 0; r < traced_count; ++r) {
        sum += state[full_index(a, r)] * std::conj(state[full_index(b, r)]);
      }
      rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sum;
    }
  }
  return DensityMatrix(std::move(rho),
                       std::vector<unsigned>(keep.begin(), keep.end()));
}

std::vector<double> eigenvalues(const DensityMatrix& dm) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      symmetrized(dm.matrix()), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double det_hermitian(const DensityMatrix& dm) {
  double det = 1.0;
  if (dm.dimension() == 2) {
    const Eigen::MatrixXcd& m = dm.matrix();
    const Complex off = (m(0, 1) + std::conj(m(1, 0))) * 0.5;
    det = m(0, 0).real() * m(1, 1).real() - std::norm(off);
  } else {
    for (double ev : eigenvalues(dm)) {
      det *= (ev < 0.0 && ev >= -kPsdTol) ? 0.0 : ev;
    }
  }
  if (det < 0.0 && det >= -kPsdTol) det = 0.0;
  return det;
}

Moments moments(const DensityMatrix& dm) {
  Moments m;
  m.trace_rho2 = dm.matrix().cwiseAbs2().sum();
  for (double ev : eigenvalues(dm)) m.trace_rho3 += ev * ev * ev;
  return m;
}

double distance_from_maximally_mixed(const DensityMatrix& dm) {
  const Eigen::Index d = dm.dimension();
  const Eigen::MatrixXcd diff =
      dm.matrix() - Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
  return diff.cwiseAbs().maxCoeff();
}

}  // namespace globent
