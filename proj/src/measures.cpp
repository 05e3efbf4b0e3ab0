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
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace globent {

namespace {

constexpr double kEntropyCutoff = 1e-12;
constexpr double kPsdTol = 1e-9;

std::vector<DensityMatrix> single_qubit_rdms(const StateVector& state) {
  std::vector<DensityMatrix> out;
  out.reserve(state.num_qubits());
  for (unsigned q = 1; q <= state.num_qubits(); ++q) {
    out.push_back(reduce(state, {q}));
  }
  return out;
}

double mean(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

// mu * det rho with mu = d^d, evaluated as prod(d * eta) to stay in range.
double scaled_determinant(const DensityMatrix& dm) {
  const Eigen::Index d = dm.dimension();
  if (d == 2) return 4.0 * det_hermitian(dm);
  const double dd = static_cast<double>(d);
  double prod = 1.0;
  for (double ev : eigenvalues(dm)) {
    prod *= dd * ((ev < 0.0 && ev >= -kPsdTol) ? 0.0 : ev);
  }
  return prod;
}

void check_dimension(const DensityMatrix& dm, Eigen::Index expected,
                     const char* what) {
  if (dm.dimension() != expected) {
    throw std::invalid_argument(std::string(what) + " requires a " +
                                std::to_string(expected) + "x" +
                                std::to_string(expected) + " density matrix");
  }
}

}  // namespace

double e_ad(const StateVector& state) {
  return mean(one_tangles(state));
}

std::vector<double> one_tangles(const StateVector& state) {
  std::vector<double> out;
  out.reserve(state.num_qubits());
  for (const auto& rho : single_qubit_rdms(state)) {
    out.push_back(4.0 * det_hermitian(rho));
  }
  return out;
}

double closed_form_det_rho1(const StateVector& state) {
  const unsigned n = state.num_qubits();
  if (n < 2) {
    throw std::invalid_argument("closed-form det rho_1 requires n >= 2");
  }
  const std::size_t half = state.dimension() / 2;
  const auto c = state.amplitudes();
  double sum = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = i + 1; j < half; ++j) {
      sum += std::norm(c[i] * c[half + j] - c[j] * c[half + i]);
    }
  }
  return sum;
}

double linear_entropy(const DensityMatrix& dm) {
  check_dimension(dm, 2, "linear entropy");
  return 2.0 * (1.0 - moments(dm).trace_rho2);
}

double von_neumann(const DensityMatrix& dm) {
  double s = 0.0;
  for (double ev : eigenvalues(dm)) {
    if (ev > kEntropyCutoff) s -= ev * std::log(ev);
  }
  return s;
}

double taylor_residual(const DensityMatrix& dm) {
  check_dimension(dm, 2, "entropy expansion residual");
  const double approx = 2.0 * std::numbers::ln2 - 1.0 + 4.0 * det_hermitian(dm);
  return std::abs(2.0 * von_neumann(dm) - approx);
}

std::vector<double> taylor_residuals(const StateVector& state) {
  std::vector<double> out;
  for (const auto& rho : single_qubit_rdms(state)) {
    out.push_back(taylor_residual(rho));
  }
  return out;
}

double taylor_residual(const StateVector& state) {
  const auto r = taylor_residuals(state);
  return *std::max_element(r.begin(), r.end());
}

std::vector<std::vector<unsigned>> qubit_subsets(unsigned n, unsigned level) {
  std::vector<std::vector<unsigned>> out;
  if (level == 0 || level > n) return out;
  std::vector<unsigned> cur(level);
  std::iota(cur.begin(), cur.end(), 1U);
  while (true) {
    out.push_back(cur);
    int t = static_cast<int>(level) - 1;
    while (t >= 0 && cur[t] == n - level + 1 + static_cast<unsigned>(t)) --t;
    if (t < 0) break;
    ++cur[t];
    for (unsigned s = static_cast<unsigned>(t) + 1; s < level; ++s) {
      cur[s] = cur[s - 1] + 1;
    }
  }
  return out;
}

double e_ad_subset(const StateVector& state, unsigned level) {
  const unsigned n = state.num_qubits();
  if (level < 1 || level > n / 2 || level > kMaxKeptQubits) {
    throw std::invalid_argument("subset level " + std::to_string(level) +
                                " outside 1..min(n/2, 12)");
  }
  const auto subsets = qubit_subsets(n, level);
  double sum = 0.0;
  for (const auto& s : subsets) sum += scaled_determinant(reduce(state, s));
  return sum / static_cast<double>(subsets.size());
}

double e_ad_global(const StateVector& state) {
  const unsigned n = state.num_qubits();
  if (n < 2) throw std::invalid_argument("global subset measure needs n >= 2");
  const unsigned top = std::min(n / 2, kMaxKeptQubits);
  double sum = 0.0;
  for (unsigned l = 1; l <= top; ++l) sum += e_ad_subset(state, l);
  return sum / static_cast<double>(top);
}

bool is_ame(const StateVector& state, double tol) {
  const unsigned n = state.num_qubits();
  if (n < 2) throw std::invalid_argument("AME test needs n >= 2");
  for (unsigned l = 1; l <= std::min(n / 2, kMaxKeptQubits); ++l) {
    for (const auto& s : qubit_subsets(n, l)) {
      if (distance_from_maximally_mixed(reduce(state, s)) > tol) return false;
    }
  }
  return true;
}

MeasureReport full_report(const StateVector& state, const ReportOptions& options) {
  const unsigned n = state.num_qubits();
  if (options.tangles && n != 3) {
    throw std::invalid_argument("tangles are defined for n = 3 only");
  }
  MeasureReport r;
  r.n = n;
  std::vector<double> linear, entropy, residual;
  for (const auto& rho : single_qubit_rdms(state)) {
    r.one_tangles.push_back(4.0 * det_hermitian(rho));
    linear.push_back(linear_entropy(rho));
    entropy.push_back(von_neumann(rho));
    residual.push_back(taylor_residual(rho));
  }
  r.e_ad = mean(r.one_tangles);
  r.e_mw = e_mw(state, options.wedge);
  r.avg_linear_entropy = mean(linear);
  r.avg_von_neumann = mean(entropy);
  r.taylor_residual = *std::max_element(residual.begin(), residual.end());
  if (options.tangles) r.tangles = three_qubit_tangles(state);
  if (options.subset_levels > 0 && n >= 2) {
    const unsigned top = std::min(n / 2, kMaxKeptQubits);
    const unsigned listed = std::min(options.subset_levels, top);
    double sum = 0.0;
    for (unsigned l = 1; l <= listed; ++l) {
      const double v = e_ad_subset(state, l);
      r.e_ad_levels.emplace_back(l, v);
      sum += v;
    }
    if (listed == top) r.e_ad_global = sum / static_cast<double>(top);
  }
  return r;
}

}  // namespace globent
