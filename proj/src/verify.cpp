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

#include "globent/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace globent {

namespace {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double resolve_tolerance(const SuiteConfig& config, const std::string& name,
                         double fallback) {
  if (auto it = config.tolerances.find(name); it != config.tolerances.end()) {
    return it->second;
  }
  if (auto it = config.tolerances.find("*"); it != config.tolerances.end()) {
    return it->second;
  }
  return fallback;
}

// Aggregates residuals (max) and structural checks (count) for one property.
class Recorder {
 public:
  Recorder(const SuiteConfig& config, std::string name,
           std::vector<std::string> anchors, double tolerance) {
    record_.name = std::move(name);
    record_.anchors = std::move(anchors);
    record_.trials = config.trials;
    record_.tolerance = resolve_tolerance(config, record_.name, tolerance);
  }

  void residual(double r, std::optional<std::uint64_t> seed = std::nullopt) {
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    if (!seen_ || r > record_.max_residual) {
      record_.max_residual = r;
      worst_ = seed;
      seen_ = true;
    }
  }

  void require(bool ok, std::optional<std::uint64_t> seed = std::nullopt) {
    if (ok) return;
    if (record_.violations++ == 0) first_violation_ = seed;
  }

  PropertyRecord finish() {
    record_.passed = record_.max_residual < record_.tolerance && record_.violations == 0;
    record_.worst_seed = record_.violations > 0 ? first_violation_ : worst_;
    return std::move(record_);
  }

 private:
  PropertyRecord record_;
  bool seen_ = false;
  std::optional<std::uint64_t> worst_;
  std::optional<std::uint64_t> first_violation_;
};

unsigned draw(Rng& rng, unsigned lo, unsigned hi) {
  return lo + static_cast<unsigned>(rng() % (hi - lo + 1));
}

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class F>
void for_trials(const SuiteConfig& config, std::string_view name, F&& body) {
  for (unsigned t = 0; t < config.trials; ++t) {
    const std::uint64_t seed = trial_seed(config.seed, name, t);
    Rng rng(seed);
    body(rng, seed);
  }
}

std::vector<Unitary2> random_locals(Rng& rng, unsigned n) {
  std::vector<Unitary2> us;
  us.reserve(n);
  for (unsigned k = 0; k < n; ++k) us.push_back(haar_unitary(rng()));
  return us;
}

StateVector product_of_singles(Rng& rng, unsigned n) {
  ProductFamily p;
  for (unsigned k = 0; k < n; ++k) p.factors.push_back(haar_random_state(1, rng()));
  return build_family(p);
}

double mean(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

DensityMatrix near_mixed(Rng& rng, double eps) {
  const double a = 2.0 * uniform01(rng) - 1.0;
  const double re = 2.0 * uniform01(rng) - 1.0;
  const double im = 2.0 * uniform01(rng) - 1.0;
  const Complex b(re, im);
  Eigen::Matrix2cd h;
  h << a, b, std::conj(b), -a;
  h /= h.cwiseAbs().maxCoeff();
  const Eigen::Matrix2cd rho = Eigen::Matrix2cd::Identity() * 0.5 + 0.5 * eps * h;
  return DensityMatrix::from_matrix(Eigen::MatrixXcd(rho));
}

constexpr double kMaxDet = 0.25;

}  // namespace

void validate(const SuiteConfig& config) {
  if (config.n_min < 2 || config.n_max > 12 || config.n_min > config.n_max) {
    throw std::invalid_argument("suite n range must satisfy 2 <= n_min <= n_max <= 12, got " +
                                std::to_string(config.n_min) + ".." +
                                std::to_string(config.n_max));
  }
}

std::uint64_t trial_seed(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(fnv1a(name))) + index);
}

StateVector ame_five_qubit_state() {
  constexpr unsigned n = 5;
  // Stabilizer XZZXI and its cyclic shifts.
  const std::array<const char*, 4> generators{"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  std::vector<Complex> psi(1U << n, Complex{0.0, 0.0});
  psi[0] = 1.0;
  for (const char* g : generators) {
    std::size_t flip = 0;
    std::size_t phase = 0;
    for (unsigned k = 1; k <= n; ++k) {
      const std::size_t bit = qubit_bit(n, k);
      if (g[k - 1] == 'X') flip |= bit;
      if (g[k - 1] == 'Z') phase |= bit;
    }
    std::vector<Complex> next(psi.size());
    for (std::size_t y = 0; y < psi.size(); ++y) {
      const std::size_t x = y ^ flip;
      const double sign = (std::popcount(x & phase) % 2 == 0) ? 1.0 : -1.0;
      next[y] = 0.5 * (psi[y] + sign * psi[x]);
    }
    psi = std::move(next);
  }
  return from_amplitudes(n, std::move(psi), true);
}

PropertyRecord check_decomposition_law(const SuiteConfig& config) {
  Recorder rec(config, "decomposition_law", {"decomposition-law", "bell-tensor-power"}, 1e-10);
  const auto bell = build_family(BellFamily{});
  rec.residual(std::abs(e_ad(tensor(bell, bell)) - 1.0));
  rec.residual(std::abs(e_ad(tensor(bell, tensor(bell, bell))) - 1.0));
  rec.residual(std::abs(e_ad(tensor(build_family(BasisFamily{1, 0}), bell)) - 2.0 / 3.0));
  for_trials(config, "decomposition_law", [&](Rng& rng, std::uint64_t seed) {
    const unsigned total = draw(rng, config.n_min, config.n_max);
    const unsigned k = draw(rng, 1, total - 1);
    const unsigned l = total - k;
    const auto phi = haar_random_state(k, rng());
    const auto psi = haar_random_state(l, rng());
    const double expected = (k * e_ad(phi) + l * e_ad(psi)) / total;
    rec.residual(std::abs(e_ad(tensor(phi, psi)) - expected), seed);
  });
  return rec.finish();
}

PropertyRecord check_single_factor_bound(const SuiteConfig& config) {
  Recorder rec(config, "single_factor_bound", {"single-factor-bound"}, 1e-12);
  const auto zb = tensor(build_family(BasisFamily{1, 0}), build_family(BellFamily{}));
  rec.residual(std::max(0.0, e_ad(zb) - 2.0 / 3.0));
  for_trials(config, "single_factor_bound", [&](Rng& rng, std::uint64_t seed) {
    const unsigned n = draw(rng, config.n_min, config.n_max);
    const unsigned k = draw(rng, 1, n - 1);
    // Maximal remainder makes the bound tight.
    const bool ghz_rest = rng() % 2 == 0 && n - k >= 2;
    const auto rest = ghz_rest ? apply_local_unitaries(build_family(GhzFamily{n - k}),
                                                       random_locals(rng, n - k))
                               : haar_random_state(n - k, rng());
    const auto s = tensor(product_of_singles(rng, k), rest);
    rec.residual(std::max(0.0, e_ad(s) - static_cast<double>(n - k) / n), seed);
  });
  return rec.finish();
}

PropertyRecord check_maximal_value_factors(const SuiteConfig& config) {
  Recorder rec(config, "maximal_value_factors", {"maximal-value-factors"}, 1e-10);
  for_trials(config, "maximal_value_factors", [&](Rng& rng, std::uint64_t seed) {
    const unsigned n = std::max(4U, draw(rng, config.n_min, config.n_max));
    std::vector<unsigned> sizes;
    for (unsigned left = n; left > 0;) {
      const unsigned size = (left == 2 || left == 4) ? 2 : (left == 3 ? 3 : draw(rng, 2, 3));
      sizes.push_back(size);
      left -= size;
    }
    ProductFamily maximal;
    for (unsigned size : sizes) {
      const auto f = apply_local_unitaries(build_family(GhzFamily{size}),
                                           random_locals(rng, size));
      rec.residual(std::abs(e_ad(f) - 1.0), seed);
      maximal.factors.push_back(f);
    }
    rec.residual(std::abs(e_ad(build_family(maximal)) - 1.0), seed);
    // Any non-maximal factor drags the product below one.
    ProductFamily spoiled = maximal;
    const std::size_t victim = rng() % spoiled.factors.size();
    spoiled.factors[victim] = haar_random_state(sizes[victim], rng());
    rec.require(e_ad(build_family(spoiled)) < 1.0 - 1e-9, seed);
  });
  return rec.finish();
}

PropertyRecord check_one_tangle_average(const SuiteConfig& config) {
  Recorder rec(config, "one_tangle_average", {"one-tangle-average"}, 1e-12);
  const auto w = build_family(WFamily{5});
  rec.residual(std::abs(e_ad(w) - mean(one_tangles(w))));
  for_trials(config, "one_tangle_average", [&](Rng& rng, std::uint64_t seed) {
    const auto s = haar_random_state(draw(rng, config.n_min, config.n_max), rng());
    rec.residual(std::abs(e_ad(s) - mean(one_tangles(s))), seed);
  });
  return rec.finish();
}

PropertyRecord check_mixedness(const SuiteConfig& config) {
  Recorder rec(config, "mixedness", {"maximally-mixed-iff", "maximal-iff-mixed"}, 1e-5);
  Eigen::MatrixXcd half = Eigen::MatrixXcd::Identity(2, 2) * 0.5;
  const auto mixed = DensityMatrix::from_matrix(half);
  rec.require(det_hermitian(mixed) == kMaxDet);
  rec.residual(distance_from_maximally_mixed(mixed));
  Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(2, 2);
  skew(0, 0) = 0.6;
  skew(1, 1) = 0.4;
  rec.require(det_hermitian(DensityMatrix::from_matrix(skew)) < kMaxDet);
  for_trials(config, "mixedness", [&](Rng& rng, std::uint64_t seed) {
    // Forward: any visible bump lowers the determinant.
    const double eps = std::pow(10.0, -6.0 + 5.0 * uniform01(rng));
    rec.require(det_hermitian(near_mixed(rng, eps)) < kMaxDet, seed);
    // Reverse: a determinant at the maximum pins the matrix to I/2.
    const double tiny = std::pow(10.0, -10.0 + 5.0 * uniform01(rng));
    const auto rho = near_mixed(rng, tiny);
    if (det_hermitian(rho) >= kMaxDet - 1e-12) {
      rec.residual(distance_from_maximally_mixed(rho), seed);
    }
    const auto s = haar_random_state(draw(rng, config.n_min, config.n_max), rng());
    for (unsigned q = 1; q <= s.num_qubits(); ++q) {
      const auto r = reduce(s, {q});
      if (det_hermitian(r) >= kMaxDet - 1e-12) {
        rec.residual(distance_from_maximally_mixed(r), seed);
      }
    }
  });
  return rec.finish();
}

PropertyRecord check_range_and_separability(const SuiteConfig& config) {
  Recorder rec(config, "range_and_separability",
               {"range", "separable-zero", "biseparable-positive"}, 1e-12);
  rec.residual(e_ad(build_family(BasisFamily{4, 0})));
  for_trials(config, "range_and_separability", [&](Rng& rng, std::uint64_t seed) {
    const unsigned n = draw(rng, config.n_min, config.n_max);
    const double e = e_ad(haar_random_state(n, rng()));
    rec.residual(std::max({0.0, -e, e - 1.0}), seed);
    const auto product = product_of_singles(rng, n);
    rec.residual(std::abs(e_ad(product)), seed);
    rec.residual(std::abs(e_mw(product)), seed);
    if (n >= 3) {
      // Entangled block of at least two qubits next to an arbitrary rest.
      const unsigned a = draw(rng, 1, n - 2);
      const auto left = haar_random_state(a, rng());
      const double eb = e_ad(tensor(left, haar_random_state(n - a, rng())));
      rec.require(eb > 0.0 && eb <= 1.0 + 1e-12, seed);
    }
  });
  return rec.finish();
}

PropertyRecord check_lu_invariance(const SuiteConfig& config) {
  Recorder rec(config, "lu_invariance", {"lu-invariance"}, 1e-10);
  {
    const auto s = haar_random_state(3, config.seed);
    const std::vector<Unitary2> id(3, Unitary2::Identity());
    const auto t = apply_local_unitaries(s, id);
    rec.residual(std::abs(e_ad(t) - e_ad(s)));
    rec.residual(std::abs(e_mw(t) - e_mw(s)));
  }
  {
    const auto ghz = build_family(GhzFamily{3});
    std::vector<Unitary2> phases;
    for (double theta : {0.3, 1.1, -2.5}) {
      Unitary2 u = Unitary2::Zero();
      u(0, 0) = 1.0;
      u(1, 1) = std::polar(1.0, theta);
      phases.push_back(u);
    }
    rec.residual(std::abs(e_ad(apply_local_unitaries(ghz, phases)) - 1.0));
  }
  for_trials(config, "lu_invariance", [&](Rng& rng, std::uint64_t seed) {
    const unsigned n = draw(rng, config.n_min, config.n_max);
    const auto s = haar_random_state(n, rng());
    const auto t = apply_local_unitaries(s, random_locals(rng, n));
    rec.residual(std::abs(e_ad(t) - e_ad(s)), seed);
    rec.residual(std::abs(e_mw(t) - e_mw(s)), seed);
  });
  return rec.finish();
}

std::vector<PropertyRecord> check_examples(const SuiteConfig& config) {
  std::vector<PropertyRecord> out;
  {
    Recorder rec(config, "examples_w", {"w-state-formula", "w-state-decreasing"}, 1e-12);
    double previous = std::numeric_limits<double>::infinity();
    for (unsigned n = 2; n <= 12; ++n) {
      const double e = e_ad(build_family(WFamily{n}));
      rec.residual(std::abs(e - 4.0 * (n - 1) / (static_cast<double>(n) * n)));
      rec.require(e < previous);
      previous = e;
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec(config, "examples_ghz_like", {"ghz-like-formula"}, 1e-12);
    const double a = std::sqrt(0.8);
    const double b = std::sqrt(0.2);
    rec.residual(std::abs(e_ad(build_family(GhzLikeFamily{3, a, b})) - 0.64));
    for_trials(config, "examples_ghz_like", [&](Rng& rng, std::uint64_t seed) {
      const unsigned n = draw(rng, config.n_min, config.n_max);
      const double alpha = uniform01(rng);
      const double beta = std::sqrt(1.0 - alpha * alpha);
      const double expected = 4.0 * alpha * alpha * beta * beta;
      rec.residual(std::abs(e_ad(build_family(GhzLikeFamily{n, alpha, beta})) - expected),
                   seed);
    });
    out.push_back(rec.finish());
  }
  {
    Recorder rec(config, "examples_g_state", {"g-state"}, 1e-10);
    GFamily equal{4, {}};
    for (const auto& s : g_state_representatives(4)) equal.coefficients.emplace_back(s, 0.5);
    rec.residual(std::abs(e_ad(build_family(equal)) - 1.0));
    for_trials(config, "examples_g_state", [&](Rng& rng, std::uint64_t seed) {
      const unsigned n = rng() % 2 == 0 ? 4 : 6;
      std::normal_distribution<double> gauss;
      GFamily g{n, {}};
      for (const auto& s : g_state_representatives(n)) {
        const double re = gauss(rng);
        g.coefficients.emplace_back(s, Complex(re, gauss(rng)));
      }
      rec.residual(std::abs(e_ad(build_family(g)) - 1.0), seed);
    });
    out.push_back(rec.finish());
  }
  {
    Recorder rec(config, "examples_cluster", {"cluster-states"}, 1e-10);
    for (unsigned n : {4U, 6U, 8U}) {
      for (auto sign : {ClusterSign::kPlus, ClusterSign::kMinus}) {
        const auto s = build_family(ClusterFamily{n, sign});
        for (unsigned q = 1; q <= n; ++q) {
          rec.residual(std::abs(det_hermitian(reduce(s, {q})) - kMaxDet));
        }
        rec.residual(std::abs(e_ad(s) - 1.0));
      }
    }
    out.push_back(rec.finish());
  }
  {
    Recorder rec(config, "examples_ame", {"ame-state"}, 1e-10);
    for (const auto& s : {build_family(GhzFamily{3}), ame_five_qubit_state()}) {
      rec.residual(std::abs(e_ad(s) - 1.0));
      rec.require(is_ame(s));
    }
    out.push_back(rec.finish());
  }
  return out;
}

PropertyRecord check_wedge_determinant_equivalence(const SuiteConfig& config) {
  Recorder rec(config, "wedge_determinant_equivalence",
               {"meyer-wallach-measure", "average-determinant",
                "wedge-determinant-equivalence"},
               1e-10);
  rec.residual(std::abs(e_mw(build_family(BellFamily{})) - 1.0));
  rec.residual(std::abs(e_mw(build_family(BasisFamily{5, 0}))));
  for_trials(config, "wedge_determinant_equivalence", [&](Rng& rng, std::uint64_t seed) {
    const auto s = haar_random_state(draw(rng, config.n_min, config.n_max), rng());
    rec.residual(std::abs(e_ad(s) - e_mw(s)), seed);
    rec.residual(std::abs(closed_form_det_rho1(s) - det_hermitian(reduce(s, {1}))), seed);
  });
  return rec.finish();
}

PropertyRecord check_qubit_projection(const SuiteConfig& config) {
  Recorder rec(config, "qubit_projection", {"qubit-projection"}, 1e-12);
  for_trials(config, "qubit_projection", [&](Rng& rng, std::uint64_t seed) {
    const unsigned n = draw(rng, config.n_min, config.n_max);
    const auto s = haar_random_state(n, rng());
    const unsigned k = draw(rng, 1, n);
    const auto pair = project_qubit(s, k);
    const auto back = reassemble(pair);
    rec.require(std::equal(back.begin(), back.end(), s.amplitudes().begin()), seed);
    rec.residual(std::abs(norm_squared(pair.u) + norm_squared(pair.v) - 1.0), seed);
    rec.residual(std::abs(wedge_norm_squared(pair.u, pair.v) - det_hermitian(reduce(s, {k}))),
                 seed);
  });
  return rec.finish();
}

PropertyRecord check_closed_form_determinant(const SuiteConfig& config) {
  Recorder rec(config, "closed_form_determinant", {"closed-form-determinant"}, 1e-10);
  const unsigned top = std::min(config.n_max, 10U);
  for_trials(config, "closed_form_determinant", [&](Rng& rng, std::uint64_t seed) {
    const unsigned n = draw(rng, std::min(config.n_min, top), top);
    const auto s = haar_random_state(n, rng());
    const double closed = closed_form_det_rho1(s);
    rec.residual(std::abs(closed - det_hermitian(reduce(s, {1}))), seed);
    const auto s3 = haar_random_state(3, rng());
    const auto p = project_qubit(s3, 1);
    rec.residual(std::abs(closed_form_det_rho1(s3) - wedge_norm_squared(p.u, p.v)), seed);
  });
  return rec.finish();
}

PropertyRecord check_two_qubit_concurrence(const SuiteConfig& config) {
  Recorder rec(config, "two_qubit_concurrence", {"two-qubit-concurrence"}, 1e-12);
  rec.residual(std::abs(concurrence_pure_2q(build_family(BellFamily{})) - 1.0));
  for_trials(config, "two_qubit_concurrence", [&](Rng& rng, std::uint64_t seed) {
    const auto s = haar_random_state(2, rng());
    const double c = concurrence_pure_2q(s);
    rec.residual(std::abs(c * c - e_ad(s)), seed);
    rec.residual(std::abs(c * c - e_mw(s)), seed);
  });
  return rec.finish();
}

PropertyRecord check_three_qubit_decomposition(const SuiteConfig& config) {
  Recorder rec(config, "three_qubit_decomposition", {"three-qubit-decomposition"}, 1e-8);
  auto gap = [](const StateVector& s) {
    const auto t = three_qubit_tangles(s);
    return std::abs(e_ad(s) - 2.0 * (t.tau12 + t.tau13 + t.tau23) / 3.0 - t.tau123);
  };
  rec.residual(gap(build_family(GhzFamily{3})));
  rec.residual(gap(build_family(WFamily{3})));
  for_trials(config, "three_qubit_decomposition", [&](Rng& rng, std::uint64_t seed) {
    rec.residual(gap(haar_random_state(3, rng())), seed);
  });
  return rec.finish();
}

PropertyRecord check_three_tangle_bound(const SuiteConfig& config) {
  Recorder rec(config, "three_tangle_bound", {"three-tangle-bound"}, 1e-8);
  auto excess = [](const StateVector& s) { return std::max(0.0, three_tangle(s) - e_ad(s)); };
  rec.residual(excess(build_family(GhzFamily{3})));
  for_trials(config, "three_tangle_bound", [&](Rng& rng, std::uint64_t seed) {
    rec.residual(excess(haar_random_state(3, rng())), seed);
  });
  return rec.finish();
}

PropertyRecord check_ghz_lu_orbit(const SuiteConfig& config) {
  Recorder rec(config, "ghz_lu_orbit", {"ghz-lu-orbit"}, 1e-10);
  const auto ghz = build_family(GhzFamily{3});
  rec.residual(std::abs(e_ad(ghz) - 1.0));
  for_trials(config, "ghz_lu_orbit", [&](Rng& rng, std::uint64_t seed) {
    rec.residual(std::abs(e_ad(apply_local_unitaries(ghz, random_locals(rng, 3))) - 1.0),
                 seed);
  });
  return rec.finish();
}

PropertyRecord check_entropy_identities(const SuiteConfig& config) {
  Recorder rec(config, "entropy_identities",
               {"linear-entropy-chain", "linear-entropy-average", "cubic-moment-identity"},
               1e-12);
  auto check_state = [&](const StateVector& s, std::optional<std::uint64_t> seed) {
    double linear_sum = 0.0;
    for (unsigned q = 1; q <= s.num_qubits(); ++q) {
      const auto rho = reduce(s, {q});
      const double four_det = 4.0 * det_hermitian(rho);
      const auto m = moments(rho);
      rec.residual(std::abs(four_det - 2.0 * (1.0 - m.trace_rho2)), seed);
      rec.residual(std::abs(four_det - 4.0 / 3.0 * (1.0 - m.trace_rho3)), seed);
      linear_sum += linear_entropy(rho);
    }
    rec.residual(std::abs(linear_sum / s.num_qubits() - e_ad(s)), seed);
  };
  check_state(build_family(WFamily{4}), std::nullopt);
  for_trials(config, "entropy_identities", [&](Rng& rng, std::uint64_t seed) {
    check_state(haar_random_state(draw(rng, config.n_min, config.n_max), rng()), seed);
  });
  return rec.finish();
}

PropertyRecord check_entropy_expansion(const SuiteConfig& config) {
  Recorder rec(config, "entropy_expansion", {"entropy-expansion"}, 1e-12);
  // For 4 det >= 0.8 the gap stays below (1 - 4 det)^2 / 2.
  auto excess = [](const DensityMatrix& rho) {
    const double four_det = 4.0 * det_hermitian(rho);
    const double x = 1.0 - four_det;
    return std::max(0.0, taylor_residual(rho) - 0.5 * x * x);
  };
  rec.residual(taylor_residual(build_family(GhzFamily{3})));
  for_trials(config, "entropy_expansion", [&](Rng& rng, std::uint64_t seed) {
    const auto s = haar_random_state(draw(rng, config.n_min, config.n_max), rng());
    for (unsigned q = 1; q <= s.num_qubits(); ++q) {
      const auto rho = reduce(s, {q});
      if (4.0 * det_hermitian(rho) >= 0.8) rec.residual(excess(rho), seed);
    }
    const auto bumped = near_mixed(rng, 0.45 * uniform01(rng));
    rec.residual(excess(bumped), seed);
  });
  return rec.finish();
}

PropertyRecord check_subset_measures(const SuiteConfig& config) {
  Recorder rec(config, "subset_measures",
               {"subset-normalization", "global-measure-range", "ame-detection",
                "global-separable", "biseparable-global", "global-lu-invariance"},
               1e-10);
  rec.residual(std::abs(e_ad_global(build_family(GhzFamily{3})) - 1.0));
  rec.require(is_ame(build_family(GhzFamily{3})));
  rec.residual(std::abs(e_ad_global(ame_five_qubit_state()) - 1.0));
  rec.require(is_ame(ame_five_qubit_state()));
  rec.require(!is_ame(build_family(GhzFamily{4})));
  rec.require(!is_ame(build_family(WFamily{3})));
  const double phi = e_ad_global(build_family(ClusterFamily{4, ClusterSign::kPlus}));
  rec.require(phi > 0.0 && phi < 1.0);
  rec.residual(std::abs(e_ad_global(build_family(BasisFamily{4, 0}))));
  for_trials(config, "subset_measures", [&](Rng& rng, std::uint64_t seed) {
    const unsigned n = draw(rng, config.n_min, config.n_max);
    const auto s = haar_random_state(n, rng());
    rec.residual(std::abs(e_ad_subset(s, 1) - e_ad(s)), seed);
    const double g = e_ad_global(s);
    rec.residual(std::max({0.0, -g, g - 1.0}), seed);
    const double g_rotated = e_ad_global(apply_local_unitaries(s, random_locals(rng, n)));
    rec.residual(std::abs(g_rotated - g), seed);
    rec.residual(std::abs(e_ad_global(product_of_singles(rng, n))), seed);
    const unsigned a = draw(rng, 1, n - 1);
    const auto left = haar_random_state(a, rng());
    const auto bisep = tensor(left, haar_random_state(n - a, rng()));
    rec.require(e_ad_global(bisep) < 1.0 - 1e-9, seed);
  });
  return rec.finish();
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = config;
  if (config.trials > 0) {
    using Check = std::function<std::vector<PropertyRecord>(const SuiteConfig&)>;
    auto one = [](PropertyRecord (*f)(const SuiteConfig&)) -> Check {
      return [f](const SuiteConfig& c) { return std::vector<PropertyRecord>{f(c)}; };
    };
    const std::vector<Check> checks{
        one(check_decomposition_law),       one(check_single_factor_bound),
        one(check_maximal_value_factors),   one(check_one_tangle_average),
        one(check_mixedness),               one(check_range_and_separability),
        one(check_lu_invariance),           check_examples,
        one(check_wedge_determinant_equivalence), one(check_qubit_projection),
        one(check_closed_form_determinant), one(check_two_qubit_concurrence),
        one(check_three_qubit_decomposition), one(check_three_tangle_bound),
        one(check_ghz_lu_orbit),            one(check_entropy_identities),
        one(check_entropy_expansion),       one(check_subset_measures),
    };
    std::vector<std::vector<PropertyRecord>> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) {
        results[i] = checks[i](config);
      }
    };
    unsigned threads = config.threads != 0 ? config.threads
                                           : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(checks.size()));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    for (auto& group : results) {
      for (auto& r : group) report.records.push_back(std::move(r));
    }
  }
  report.passed = std::all_of(report.records.begin(), report.records.end(),
                              [](const PropertyRecord& r) { return r.passed; });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

const std::vector<std::string>& required_anchors() {
  static const std::vector<std::string> anchors{
      "qubit-projection",        "meyer-wallach-measure",   "average-determinant",
      "decomposition-law",       "single-factor-bound",     "maximal-value-factors",
      "bell-tensor-power",       "one-tangle-average",      "maximally-mixed-iff",
      "range",                   "maximal-iff-mixed",       "separable-zero",
      "biseparable-positive",    "lu-invariance",           "w-state-formula",
      "w-state-decreasing",      "wedge-determinant-equivalence",
      "two-qubit-concurrence",   "three-qubit-decomposition", "three-tangle-bound",
      "ghz-lu-orbit",            "closed-form-determinant", "ame-state",
      "g-state",                 "ghz-like-formula",        "cluster-states",
      "entropy-expansion",       "linear-entropy-chain",    "linear-entropy-average",
      "cubic-moment-identity",   "subset-normalization",    "global-measure-range",
      "ame-detection",           "global-separable",        "biseparable-global",
      "global-lu-invariance",
  };
  return anchors;
}

std::string to_json(const SuiteReport& report, bool include_timing) {
  using nlohmann::ordered_json;
  ordered_json config;
  config["seed"] = report.config.seed;
  config["trials"] = report.config.trials;
  config["n_min"] = report.config.n_min;
  config["n_max"] = report.config.n_max;
  config["tolerances"] = ordered_json::object();
  for (const auto& [k, v] : report.config.tolerances) config["tolerances"][k] = v;

  ordered_json properties = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json p;
    p["name"] = r.name;
    p["anchors"] = r.anchors;
    p["trials"] = r.trials;
    p["max_residual"] = r.max_residual;
    p["tolerance"] = r.tolerance;
    p["violations"] = r.violations;
    p["passed"] = r.passed;
    p["worst_seed"] = r.worst_seed ? ordered_json(*r.worst_seed) : ordered_json(nullptr);
    properties.push_back(std::move(p));
  }

  ordered_json out;
  out["config"] = std::move(config);
  out["passed"] = report.passed;
  out["properties"] = std::move(properties);
  if (include_timing) out["wall_seconds"] = report.wall_seconds;
  return out.dump(2) + "\n";
}

}  // namespace globent
