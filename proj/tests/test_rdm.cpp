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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "catch_amalgamated.hpp"
#include "globent/rdm.hpp"
#include "oracles.hpp"

namespace globent {
namespace test_rdm {

using Catch::Matchers::WithinAbs;

Eigen::MatrixXcd diag(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v.cast<Complex>().asDiagonal();
}

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::vector<unsigned> qubits_all(unsigned n) {
  std::vector<unsigned> q(n);
  std::iota(q.begin(), q.end(), 1U);
  return q;
}

TEST_CASE("reduce on named states") {
  SECTION("ghz single qubits are maximally mixed") {
    for (unsigned n = 2; n <= 8; ++n) {
      const auto ghz = build_family(GhzFamily{n});
      for (unsigned q = 1; q <= n; ++q) {
        CHECK(max_diff(reduce(ghz, {q}).matrix(), diag({0.5, 0.5})) <= 1e-15);
      }
    }
  }
  SECTION("unentangled qubit is pure") {
    const auto s = build_family(
        ProductFamily{{build_family(BasisFamily{1, 0}), build_family(BellFamily{})}});
    CHECK(max_diff(reduce(s, {1}).matrix(), diag({1.0, 0.0})) <= 1e-15);
  }
  SECTION("kept qubit order sets the index bits") {
    const auto s = build_family(BasisFamily{3, 0b011});
    // qubit 2 = 1, qubit 3 = 1 -> row index 3 of rho_{23}; rho_{13} sees 01.
    CHECK(max_diff(reduce(s, {2, 3}).matrix(), diag({0, 0, 0, 1})) <= 0.0);
    CHECK(max_diff(reduce(s, {1, 3}).matrix(), diag({0, 1, 0, 0})) <= 0.0);
  }
}

TEST_CASE("reduce_naive_oracle examples") {
  CHECK(max_diff(reduce_naive_oracle(build_family(BasisFamily{3, 0}), {1, 2}).matrix(),
                 diag({1, 0, 0, 0})) <= 0.0);
  CHECK(max_diff(reduce_naive_oracle(build_family(BellFamily{}), {1}).matrix(),
                 diag({0.5, 0.5})) <= 1e-15);
}

TEST_CASE("blocked kernel matches the naive oracle", "[property]") {
  const auto s5 = haar_random_state(5, 2024);
  CHECK(max_diff(reduce(s5, {2, 4}).matrix(),
                 reduce_naive_oracle(s5, {2, 4}).matrix()) <= 1e-12);

  std::mt19937_64 gen(77);
  for (unsigned n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto s = haar_random_state(n, gen());
      const unsigned mask = 1 + static_cast<unsigned>(gen() % ((1U << n) - 1));
      std::vector<unsigned> keep;
      for (unsigned q = 1; q <= n; ++q) {
        if (mask & (1U << (q - 1))) keep.push_back(q);
      }
      const auto fast = reduce(s, keep);
      const auto slow = reduce_naive_oracle(s, keep);
      CHECK(fast.kept_qubits() == keep);
      CHECK(max_diff(fast.matrix(), slow.matrix()) <= 1e-12);
    }
  }
}

TEST_CASE("reduce handles large blocks") {
  // d = 256 with 2^6 traced columns exercises the partial final block.
  const auto s = haar_random_state(14, 5);
  const std::vector<unsigned> keep{1, 3, 5, 7, 9, 11, 13, 14};
  const auto rho = reduce(s, keep);
  CHECK_THAT(rho.matrix().trace().real(), WithinAbs(1.0, 1e-12));
  CHECK((rho.matrix() - rho.matrix().adjoint()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("reduce argument validation") {
  const auto s = haar_random_state(4, 1);
  CHECK_THROWS_AS(reduce(s, std::vector<unsigned>{}), std::invalid_argument);
  CHECK_THROWS_AS(reduce(s, {0}), std::out_of_range);
  CHECK_THROWS_AS(reduce(s, {5}), std::out_of_range);
  CHECK_THROWS_AS(reduce(s, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(reduce(s, {3, 1}), std::invalid_argument);
  const auto big = haar_random_state(13, 1);
  std::vector<unsigned> all13(13);
  std::iota(all13.begin(), all13.end(), 1U);
  CHECK_THROWS_AS(reduce(big, all13), std::invalid_argument);
}

TEST_CASE("DensityMatrix::from_matrix validation") {
  CHECK_NOTHROW(DensityMatrix::from_matrix(diag({0.8, 0.2})));
  CHECK(DensityMatrix::from_matrix(diag({0.8, 0.2})).kept_qubits() ==
        std::vector<unsigned>{1});
  Eigen::MatrixXcd not_hermitian = diag({0.5, 0.5});
  not_hermitian(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(not_hermitian), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(diag({0.5, 0.6})), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(diag({1.5, -0.5})), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(diag({0.4, 0.3, 0.3})),
                  std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(diag({0.8, 0.2}), {1, 2}),
                  std::invalid_argument);
}

TEST_CASE("det_hermitian") {
  CHECK(det_hermitian(DensityMatrix::from_matrix(diag({0.5, 0.5}))) == 0.25);
  CHECK_THAT(det_hermitian(DensityMatrix::from_matrix(diag({0.8, 0.2}))),
             WithinAbs(0.16, 1e-15));
  SECTION("rank-one projectors have zero determinant") {
    for (unsigned n = 1; n <= 3; ++n) {
      const auto s = haar_random_state(n, 300 + n);
      const auto rho = reduce(s, qubits_all(n));
      const double det = det_hermitian(rho);
      CHECK(det >= 0.0);
      CHECK(det <= 1e-15);
    }
  }
  SECTION("matches the LU determinant on random matrices") {
    for (Eigen::Index d : {2, 4, 8}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto m = oracle::random_density(d, seed * 31 + d);
        CHECK_THAT(det_hermitian(DensityMatrix::from_matrix(m)),
                   WithinAbs(m.determinant().real(), 1e-14));
      }
    }
  }
}

TEST_CASE("single-qubit determinant range", "[property]") {
  for (unsigned n = 2; n <= 9; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto s = haar_random_state(n, 10 * n + seed);
      for (unsigned q = 1; q <= n; ++q) {
        const double det = det_hermitian(reduce(s, {q}));
        CHECK(det >= 0.0);
        CHECK(det <= 0.25);
      }
    }
  }
}

TEST_CASE("moments") {
  const auto half = moments(DensityMatrix::from_matrix(diag({0.5, 0.5})));
  CHECK_THAT(half.trace_rho2, WithinAbs(0.5, 1e-15));
  CHECK_THAT(half.trace_rho3, WithinAbs(0.25, 1e-15));
  const auto pure = moments(reduce(build_family(WFamily{3}), {1, 2, 3}));
  CHECK_THAT(pure.trace_rho2, WithinAbs(1.0, 1e-15));
  CHECK_THAT(pure.trace_rho3, WithinAbs(1.0, 1e-15));

  SECTION("single-qubit identity chain", "[property]") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto s = haar_random_state(2 + seed % 6, seed);
      const auto rho = reduce(s, {1});
      const auto m = moments(rho);
      const double four_det = 4.0 * det_hermitian(rho);
      CHECK_THAT(four_det, WithinAbs(2.0 * (1.0 - m.trace_rho2), 1e-12));
      CHECK_THAT(four_det, WithinAbs(4.0 / 3.0 * (1.0 - m.trace_rho3), 1e-12));
    }
  }
}

TEST_CASE("eigenvalues") {
  const auto ev = eigenvalues(DensityMatrix::from_matrix(diag({0.2, 0.8})));
  CHECK_THAT(ev[0], WithinAbs(0.8, 1e-15));
  CHECK_THAT(ev[1], WithinAbs(0.2, 1e-15));
  const auto mixed = eigenvalues(DensityMatrix::from_matrix(diag({0.5, 0.5})));
  CHECK_THAT(mixed[0], WithinAbs(0.5, 1e-15));
  CHECK_THAT(mixed[1], WithinAbs(0.5, 1e-15));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto rho = reduce(haar_random_state(6, seed), {2, 5});
    const auto e = eigenvalues(rho);
    CHECK(std::is_sorted(e.begin(), e.end(), std::greater<>()));
    CHECK(e.back() >= -1e-9);
    double sum = 0.0;
    for (double x : e) sum += x;
    CHECK_THAT(sum, WithinAbs(1.0, 1e-10));
  }
}

TEST_CASE("maximal determinant forces the identity") {
  CHECK(distance_from_maximally_mixed(DensityMatrix::from_matrix(diag({0.5, 0.5}))) ==
        0.0);
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const double eps = std::pow(10.0, -9.0 + 8.0 * (seed % 100) / 100.0);
    const Eigen::Matrix2cd rho =
        Eigen::Matrix2cd::Identity() * 0.5 +
        eps * 0.5 * oracle::random_traceless_hermitian(seed);
    const auto dm = DensityMatrix::from_matrix(Eigen::MatrixXcd(rho));
    const double det = det_hermitian(dm);
    CHECK(det <= 0.25);
    if (eps >= 1e-6) CHECK(det < 0.25);
    if (det >= 0.25 - 1e-12) CHECK(distance_from_maximally_mixed(dm) <= 1e-5);
  }
}

TEST_CASE("complementary subsets share their spectrum", "[property]") {
  for (unsigned n = 2; n <= 8; ++n) {
    const auto s = haar_random_state(n, 900 + n);
    std::vector<unsigned> a, b;
    for (unsigned q = 1; q <= n; ++q) (q % 3 == 1 ? a : b).push_back(q);
    if (b.empty()) continue;
    auto ea = eigenvalues(reduce(s, a));
    auto eb = eigenvalues(reduce(s, b));
    const std::size_t common = std::min(ea.size(), eb.size());
    for (std::size_t i = 0; i < common; ++i) CHECK_THAT(ea[i], WithinAbs(eb[i], 1e-10));
    for (std::size_t i = common; i < ea.size(); ++i) CHECK(std::abs(ea[i]) <= 1e-10);
    for (std::size_t i = common; i < eb.size(); ++i) CHECK(std::abs(eb[i]) <= 1e-10);
  }
}

}  // namespace test_rdm
}  // namespace globent
