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

#include "globent/wedge.hpp"

#include <algorithm>
#include <stdexcept>

namespace globent {

namespace {

void check_pair(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("wedge operands differ in length");
  }
  if (u.empty()) {
    throw std::invalid_argument("wedge operands are empty");
  }
}

}  // namespace

double wedge_norm_squared(std::span<const Complex> u, std::span<const Complex> v) {
  check_pair(u, v);
  const std::size_t m = u.size();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double ur = u[i].real(), ui = u[i].imag();
    const double vr = v[i].real(), vi = v[i].imag();
    double row = 0.0;
    for (std::size_t j = i + 1; j < m; ++j) {
      // u_i v_j - u_j v_i, expanded into real arithmetic.
      const double re = (ur * v[j].real() - ui * v[j].imag()) -
                        (u[j].real() * vr - u[j].imag() * vi);
      const double im = (ur * v[j].imag() + ui * v[j].real()) -
                        (u[j].real() * vi + u[j].imag() * vr);
      row += re * re + im * im;
    }
    total += row;
  }
  return total;
}

double wedge_norm_squared_gram(
    std::span<const Complex> u, std::span<const Complex> v) {
  check_pair(u, v);
  double uu = 0.0, vv = 0.0;
  Complex uv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    uu += std::norm(u[i]);
    vv += std::norm(v[i]);
    uv += std::conj(u[i]) * v[i];
  }
  return std::max(0.0, uu * vv - std::norm(uv));
}

double e_mw(const StateVector& state, WedgeMethod method) {
  const unsigned n = state.num_qubits();
  if (n == 1) return 0.0;  // single qubit: u, v are scalars, no minors
  const bool direct =
      method == WedgeMethod::kDirect ||
      (method == WedgeMethod::kAuto && n <= kDirectWedgeMaxQubits);
  double sum = 0.0;
  for (unsigned k = 1; k <= n; ++k) {
    const ProjectionPair p = project_qubit(state, k);
    sum += direct ? wedge_norm_squared(p.u, p.v)
                  : wedge_norm_squared_gram(p.u, p.v);
  }
  return 4.0 * sum / static_cast<double>(n);
}

}  // namespace globent
