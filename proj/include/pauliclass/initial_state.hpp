// Copyright 2026 The pauliclass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "pauliclass/errors.hpp"

namespace pauliclass {

/// One qubit in a pure state, every other qubit maximally mixed:
/// rho = |psi><psi|_site (x) I / 2^{L-1}, with |psi> given by its Bloch vector.
struct InitialState {
  std::size_t site = 0;  // 0-based
  std::array<double, 3> bloch{1.0, 0.0, 0.0};

  /// "+", "-", "0", "1", "+i" or "-i" on a 0-based site.
  static InitialState named(std::size_t site, std::string_view name) {
    if (name == "+") return {site, {1, 0, 0}};
    if (name == "-") return {site, {-1, 0, 0}};
    if (name == "+i") return {site, {0, 1, 0}};
    if (name == "-i") return {site, {0, -1, 0}};
    if (name == "0") return {site, {0, 0, 1}};
    if (name == "1") return {site, {0, 0, -1}};
    throw ParseError("unknown single-qubit state '" + std::string(name) +
                     "' (expected +, -, +i, -i, 0 or 1)");
  }

  /// Pauli axis along which the state is polarized, for the default observable.
  char axis() const {
    const auto ax = std::abs(bloch[0]), ay = std::abs(bloch[1]), az = std::abs(bloch[2]);
    if (ax >= ay && ax >= az) return 'X';
    return ay >= az ? 'Y' : 'Z';
  }

  void validate(std::size_t num_sites) const {
    if (site >= num_sites) {
      throw DimensionError("initial-state site " + std::to_string(site + 1) + " out of range 1.." +
                           std::to_string(num_sites));
    }
    const double n = std::sqrt(bloch[0] * bloch[0] + bloch[1] * bloch[1] + bloch[2] * bloch[2]);
    if (std::abs(n - 1.0) > 1e-12) throw ModelError("Bloch vector must have unit norm");
  }
};

}  // namespace pauliclass
