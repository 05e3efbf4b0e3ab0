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

// Meyer-Wallach measure from qubit projections. This header and its library
// depend only on the state module; nothing here touches density matrices.

#include <span>

#include "globent/state.hpp"

namespace globent {

/// Above this qubit count kAuto switches from the pairwise minor sum to the
/// Gram form of the same wedge norm.
inline constexpr unsigned kDirectWedgeMaxQubits = 12;

enum class WedgeMethod {
  kAuto,
  /// sum_{i<j} |u_i v_j - u_j v_i|^2, O(m^2).
  kDirect,
  /// |u|^2 |v|^2 - |<u,v>|^2 (Lagrange identity), O(m).
  kGram,
};

/// Squared norm of u ^ v as the sum of all 2x2 minors, by double loop.
double wedge_norm_squared(std::span<const Complex> u, std::span<const Complex> v);

/// Wedge norm through the Lagrange identity.
double wedge_norm_squared_gram(
    std::span<const Complex> u, std::span<const Complex> v);

/// (4/n) sum_k D(u^(k), v^(k)).
double e_mw(const StateVector& state, WedgeMethod method = WedgeMethod::kAuto);

}  // namespace globent
