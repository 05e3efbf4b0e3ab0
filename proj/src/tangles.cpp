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

#include "globent/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace globent {

namespace {

// Eigenvalues below this are treated as exact zeros when building W.
constexpr double kRankCutoff = 1e-14;
constexpr double kTangleTol = 1e-8;

// Y (x) Y in the computational basis; real and symmetric.
Eigen::Matrix4d spin_flip() {
  Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

double clamp_unit(double x) {
  if (x < 0.0 && x >= -kTangleTol) return 0.0;
  if (x > 1.0 && x <= 1.0 + kTangleTol) return 1.0;
  return x;
}

}  // namespace

double concurrence_pure_2q(const StateVector& state) {
  if (state.num_qubits() != 2) {
    throw std::invalid_argument("pure-state concurrence requires n = 2");
  }
  return 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
}

double concurrence_mixed_2q(const DensityMatrix& dm) {
  if (dm.dimension() != 4) {
    throw std::invalid_argument("Wootters concurrence requires a 4x4 matrix");
  }
  const Eigen::Matrix4cd rho = (dm.matrix() + dm.matrix().adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigensolver did not converge");
  }
  // rho = W W^H with W's columns sqrt(eta_k) |e_k>.
  Eigen::MatrixXcd w(4, 4);
  Eigen::Index cols = 0;
  for (Eigen::Index k = 0; k < 4; ++k) {
    const double eta = solver.eigenvalues()(k);
    if (eta <= kRankCutoff) continue;
    w.col(cols++) = std::sqrt(eta) * solver.eigenvectors().col(k);
  }
  if (cols == 0) return 0.0;
  const Eigen::MatrixXcd wk = w.leftCols(cols);
  const Eigen::MatrixXcd t =
      wk.transpose() * spin_flip().cast<Complex>() * wk;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
  std::array<double, 4> lambda{0.0, 0.0, 0.0, 0.0};
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    lambda[static_cast<std::size_t>(k)] = svd.singularValues()(k);
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

ThreeQubitTangles three_qubit_tangles(const StateVector& state) {
  if (state.num_qubits() != 3) {
    throw std::invalid_argument("three-tangle requires n = 3");
  }
  auto tau = [&](unsigned a, unsigned b) {
    const double c = concurrence_mixed_2q(reduce(state, {a, b}));
    return c * c;
  };
  ThreeQubitTangles t;
  t.tau12 = tau(1, 2);
  t.tau13 = tau(1, 3);
  t.tau23 = tau(2, 3);
  // Monogamy residual with qubit 1 as the focus.
  t.tau123 = clamp_unit(4.0 * det_hermitian(reduce(state, {1})) - t.tau12 -
                        t.tau13);
  return t;
}

double three_tangle(const StateVector& state) {
  return three_qubit_tangles(state).tau123;
}

}  // namespace globent
