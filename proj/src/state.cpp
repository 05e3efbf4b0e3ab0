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

#include "globent/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace globent {

namespace {

constexpr double kConstructionTol = 1e-12;
constexpr double kInputNormTol = 1e-9;

void check_qubit_count(unsigned n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument(
        "qubit count " + std::to_string(n) + " outside 1.." +
        std::to_string(kMaxQubits));
  }
}

std::vector<Complex> scaled(std::vector<Complex> v, double factor) {
  for (auto& c : v) c *= factor;
  return v;
}

StateVector build(const BasisFamily& f) {
  check_qubit_count(f.n);
  std::vector<Complex> amps(std::size_t{1} << f.n);
  if (f.index >= amps.size()) {
    throw std::invalid_argument("basis index out of range");
  }
  amps[f.index] = 1.0;
  return StateVector(f.n, std::move(amps));
}

StateVector build(const BellFamily&) {
  const double h = 1.0 / std::numbers::sqrt2;
  return StateVector(2, {h, 0.0, 0.0, h});
}

StateVector build(const GhzLikeFamily& f) {
  check_qubit_count(f.n);
  if (!(f.alpha > 0.0) || !(f.beta > 0.0) || !std::isfinite(f.alpha) ||
      !std::isfinite(f.beta)) {
    throw std::invalid_argument("ghz-like requires alpha, beta > 0");
  }
  std::vector<Complex> amps(std::size_t{1} << f.n);
  amps.front() = f.alpha;
  amps.back() = f.beta;
  return from_amplitudes(f.n, std::move(amps), true);
}

StateVector build(const GhzFamily& f) {
  const double h = 1.0 / std::numbers::sqrt2;
  return build(GhzLikeFamily{f.n, h, h});
}

StateVector build(const WFamily& f) {
  check_qubit_count(f.n);
  std::vector<Complex> amps(std::size_t{1} << f.n);
  const double c = 1.0 / std::sqrt(static_cast<double>(f.n));
  for (unsigned k = 0; k < f.n; ++k) amps[std::size_t{1} << k] = c;
  return from_amplitudes(f.n, std::move(amps), true);
}

StateVector build(const ClusterFamily& f) {
  check_qubit_count(f.n);
  if (f.n % 2 != 0) {
    throw std::invalid_argument("cluster states require even n");
  }
  const unsigned half = f.n / 2;
  const std::size_t low = (std::size_t{1} << half) - 1;
  std::vector<Complex> amps(std::size_t{1} << f.n);
  amps[0] = 0.5;
  amps[low] = 0.5;
  amps[low << half] = 0.5;
  amps[(low << half) | low] = f.sign == ClusterSign::kPlus ? 0.5 : -0.5;
  return StateVector(f.n, std::move(amps));
}

StateVector build(const GFamily& f) {
  check_qubit_count(f.n);
  if (f.n % 2 != 0 || f.n < 4) {
    throw std::invalid_argument("g-state requires even n >= 4");
  }
  const std::size_t dim = std::size_t{1} << f.n;
  std::vector<Complex> amps(dim);
  std::set<std::size_t> seen;
  for (const auto& [key, coeff] : f.coefficients) {
    if (key.size() != f.n ||
        key.find_first_not_of("01") != std::string::npos) {
      throw std::invalid_argument("g-state key '" + key + "' is not an " +
                                  std::to_string(f.n) + "-bit string");
    }
    const auto ones = std::count(key.begin(), key.end(), '1');
    if (key.front() != '0' ||
        (ones != 0 && ones != static_cast<long>(f.n / 2))) {
      throw std::invalid_argument("g-state key '" + key +
                                  "' is not a canonical representative");
    }
    const std::size_t index = std::stoull(key, nullptr, 2);
    if (!seen.insert(index).second) {
      throw std::invalid_argument("duplicate g-state key '" + key + "'");
    }
    amps[index] += coeff;
    amps[index ^ (dim - 1)] += coeff;
  }
  return from_amplitudes(f.n, std::move(amps), true);
}

StateVector build(const ProductFamily& f) {
  if (f.factors.empty()) {
    throw std::invalid_argument("product requires at least one factor");
  }
  StateVector acc = f.factors.front();
  for (std::size_t i = 1; i < f.factors.size(); ++i) {
    acc = tensor(acc, f.factors[i]);
  }
  return acc;
}

}  // namespace

StateVector::StateVector(unsigned num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits_);
  if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
    throw std::invalid_argument(
        "expected " + std::to_string(std::size_t{1} << num_qubits_) +
        " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  if (std::abs(norm_squared(amplitudes_) - 1.0) > kConstructionTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

double norm_squared(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

StateVector from_amplitudes(
    unsigned num_qubits, std::vector<Complex> amplitudes, bool normalize) {
  check_qubit_count(num_qubits);
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument(
        "expected " + std::to_string(std::size_t{1} << num_qubits) +
        " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  const double nrm2 = norm_squared(amplitudes);
  if (!(nrm2 > 0.0) || !std::isfinite(nrm2)) {
    throw std::invalid_argument("amplitude vector has zero or invalid norm");
  }
  const double deviation = std::abs(std::sqrt(nrm2) - 1.0);
  if (!normalize && deviation > kInputNormTol) {
    throw std::invalid_argument(
        "amplitudes not normalized (norm^2 = " + std::to_string(nrm2) + ")");
  }
  if (normalize || std::abs(nrm2 - 1.0) > kConstructionTol) {
    amplitudes = scaled(std::move(amplitudes), 1.0 / std::sqrt(nrm2));
  }
  return StateVector(num_qubits, std::move(amplitudes));
}

StateVector tensor(const StateVector& first, const StateVector& second) {
  const unsigned n = first.num_qubits() + second.num_qubits();
  check_qubit_count(n);
  std::vector<Complex> amps(std::size_t{1} << n);
  const std::size_t db = second.dimension();
  for (std::size_t i = 0; i < first.dimension(); ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      amps[i * db + j] = first[i] * second[j];
    }
  }
  return from_amplitudes(n, std::move(amps), false);
}

StateVector build_family(const FamilySpec& spec) {
  return std::visit([](const auto& f) { return build(f); }, spec);
}

std::vector<std::string> g_state_representatives(unsigned n) {
  if (n % 2 != 0 || n < 2 || n > kMaxQubits) {
    throw std::invalid_argument("g-state representatives need even n");
  }
  std::vector<std::string> out;
  const std::size_t half_dim = std::size_t{1} << (n - 1);
  for (std::size_t i = 0; i < half_dim; ++i) {
    const int ones = std::popcount(i);
    if (i != 0 && ones != static_cast<int>(n / 2)) continue;
    std::string bits(n, '0');
    for (unsigned b = 0; b < n; ++b) {
      if ((i >> (n - 1 - b)) & 1U) bits[b] = '1';
    }
    out.push_back(std::move(bits));
  }
  return out;
}

StateVector haar_random_state(unsigned num_qubits, std::uint64_t seed) {
  check_qubit_count(num_qubits);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  for (auto& c : amps) {
    const double re = gauss(gen);
    const double im = gauss(gen);
    c = {re, im};
  }
  return from_amplitudes(num_qubits, std::move(amps), true);
}

Unitary2 haar_unitary(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double xi = unit(gen);
  const double psi = two_pi * unit(gen);
  const double chi = two_pi * unit(gen);
  const double alpha = two_pi * unit(gen);
  const double phi = std::asin(std::sqrt(xi));
  const Complex global = std::polar(1.0, alpha);
  Unitary2 u;
  u(0, 0) = global * std::polar(std::cos(phi), psi);
  u(0, 1) = global * std::polar(std::sin(phi), chi);
  u(1, 0) = -global * std::polar(std::sin(phi), -chi);
  u(1, 1) = global * std::polar(std::cos(phi), -psi);
  return u;
}

bool is_unitary(const Unitary2& u, double tol) {
  const Unitary2 residual = u * u.adjoint() - Unitary2::Identity();
  return residual.cwiseAbs().maxCoeff() <= tol;
}

StateVector apply_local_unitaries(
    const StateVector& state, std::span<const Unitary2> us) {
  const unsigned n = state.num_qubits();
  if (us.size() != n) {
    throw std::invalid_argument("need exactly one 2x2 unitary per qubit");
  }
  for (const auto& u : us) {
    if (!is_unitary(u)) {
      throw std::invalid_argument("local factor is not unitary");
    }
  }
  std::vector<Complex> amps(state.amplitudes().begin(),
                            state.amplitudes().end());
  for (unsigned k = 1; k <= n; ++k) {
    const Unitary2& u = us[k - 1];
    if (u == Unitary2::Identity()) continue;
    const std::size_t bit = qubit_bit(n, k);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      if (i & bit) continue;
      const Complex a = amps[i];
      const Complex b = amps[i | bit];
      amps[i] = u(0, 0) * a + u(0, 1) * b;
      amps[i | bit] = u(1, 0) * a + u(1, 1) * b;
    }
  }
  return from_amplitudes(n, std::move(amps), false);
}

ProjectionPair project_qubit(const StateVector& state, unsigned qubit) {
  const unsigned n = state.num_qubits();
  if (qubit < 1 || qubit > n) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) +
                            " outside 1.." + std::to_string(n));
  }
  const unsigned pos = n - qubit;
  const std::size_t low_mask = (std::size_t{1} << pos) - 1;
  const std::size_t half = state.dimension() / 2;
  ProjectionPair pair{qubit, std::vector<Complex>(half),
                      std::vector<Complex>(half)};
  for (std::size_t j = 0; j < half; ++j) {
    const std::size_t i0 = ((j & ~low_mask) << 1) | (j & low_mask);
    pair.u[j] = state[i0];
    pair.v[j] = state[i0 | (std::size_t{1} << pos)];
  }
  return pair;
}

std::vector<Complex> reassemble(const ProjectionPair& pair) {
  if (pair.u.size() != pair.v.size() || pair.u.empty() ||
      !std::has_single_bit(pair.u.size())) {
    throw std::invalid_argument("projection halves must be equal powers of 2");
  }
  const unsigned n = static_cast<unsigned>(std::countr_zero(pair.u.size())) + 1;
  if (pair.qubit < 1 || pair.qubit > n) {
    throw std::out_of_range("projection qubit out of range");
  }
  const unsigned pos = n - pair.qubit;
  const std::size_t low_mask = (std::size_t{1} << pos) - 1;
  std::vector<Complex> out(pair.u.size() * 2);
  for (std::size_t j = 0; j < pair.u.size(); ++j) {
    const std::size_t i0 = ((j & ~low_mask) << 1) | (j & low_mask);
    out[i0] = pair.u[j];
    out[i0 | (std::size_t{1} << pos)] = pair.v[j];
  }
  return out;
}

}  // namespace globent
