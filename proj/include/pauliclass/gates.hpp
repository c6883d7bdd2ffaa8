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

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pauliclass/errors.hpp"
#include "pauliclass/pauli.hpp"

namespace pauliclass {

/// Quench gates acting in the Heisenberg picture as P -> W^dagger P W.
struct QuenchGate {
  enum class Kind { kSwap, kPauliX, kPauliY, kPauliZ, kPhaseS, kAxisW };

  Kind kind = Kind::kPauliX;
  std::size_t site = 0;   // 0-based; first site for SWAP
  std::size_t site2 = 0;  // SWAP partner
  double alpha = 0.0;     // AxisW: W = X cos(alpha) + Y sin(alpha)

  static QuenchGate swap(std::size_t i, std::size_t j) { return {Kind::kSwap, i, j, 0.0}; }
  static QuenchGate pauli(char axis, std::size_t i) {
    switch (axis) {
      case 'X': case 'x': return {Kind::kPauliX, i, 0, 0.0};
      case 'Y': case 'y': return {Kind::kPauliY, i, 0, 0.0};
      case 'Z': case 'z': return {Kind::kPauliZ, i, 0, 0.0};
    }
    throw ParseError(std::string("unknown Pauli gate axis '") + axis + "'");
  }
  static QuenchGate phase_s(std::size_t i) { return {Kind::kPhaseS, i, 0, 0.0}; }
  static QuenchGate axis_w(std::size_t i, double alpha) { return {Kind::kAxisW, i, 0, alpha}; }

  bool is_clifford() const { return kind != Kind::kAxisW; }

  void validate(std::size_t num_sites) const {
    if (site >= num_sites || (kind == Kind::kSwap && site2 >= num_sites)) {
      throw DimensionError("gate " + name() + " acts outside 1.." + std::to_string(num_sites));
    }
    if (kind == Kind::kSwap && site == site2) throw ModelError("SWAP needs two distinct sites");
    if (!std::isfinite(alpha)) throw ModelError("AxisW angle must be finite");
  }

  std::string name() const {
    const auto s = std::to_string(site + 1);
    switch (kind) {
      case Kind::kSwap: return "swap(" + s + "," + std::to_string(site2 + 1) + ")";
      case Kind::kPauliX: return "x(" + s + ")";
      case Kind::kPauliY: return "y(" + s + ")";
      case Kind::kPauliZ: return "z(" + s + ")";
      case Kind::kPhaseS: return "s(" + s + ")";
      case Kind::kAxisW: return "axisw(" + s + "," + std::to_string(alpha) + ")";
    }
    return "?";
  }
};

/// A gate applied at a given time of an evolution schedule.
struct TimedGate {
  double time = 0.0;
  QuenchGate gate;
};

struct ImageTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// W^dagger P W expanded in Pauli strings with real coefficients.
struct ConjugationImage {
  PauliString input;
  std::vector<ImageTerm> outputs;

  double norm_squared() const {
    double s = 0.0;
    for (const auto& t : outputs) s += t.coefficient * t.coefficient;
    return s;
  }
};

/// Coefficients smaller than this are dropped from AxisW images.
inline constexpr double kImageCutoff = 1e-14;

inline ConjugationImage conjugate(const QuenchGate& gate, const PauliString& p) {
  gate.validate(p.num_sites());
  ConjugationImage img{p, {}};
  const char s = p.at(gate.site);
  auto with = [&](char c) {
    PauliString q = p;
    q.set(gate.site, c);
    return q;
  };
  switch (gate.kind) {
    case QuenchGate::Kind::kSwap: {
      PauliString q = p;
      q.set(gate.site, p.at(gate.site2));
      q.set(gate.site2, s);
      img.outputs.push_back({1.0, q});
      break;
    }
    case QuenchGate::Kind::kPauliX:
    case QuenchGate::Kind::kPauliY:
    case QuenchGate::Kind::kPauliZ: {
      const char w = gate.kind == QuenchGate::Kind::kPauliX   ? 'X'
                     : gate.kind == QuenchGate::Kind::kPauliY ? 'Y'
                                                              : 'Z';
      img.outputs.push_back({(s == 'I' || s == w) ? 1.0 : -1.0, p});
      break;
    }
    case QuenchGate::Kind::kPhaseS: {
      // S = diag(1, i): S^dag X S = -Y, S^dag Y S = X.
      if (s == 'X') {
        img.outputs.push_back({-1.0, with('Y')});
      } else if (s == 'Y') {
        img.outputs.push_back({1.0, with('X')});
      } else {
        img.outputs.push_back({1.0, p});
      }
      break;
    }
    case QuenchGate::Kind::kAxisW: {
      const double c = std::cos(2 * gate.alpha), sn = std::sin(2 * gate.alpha);
      auto push = [&](double coef, char sym) {
        if (std::abs(coef) > kImageCutoff) img.outputs.push_back({coef, with(sym)});
      };
      if (s == 'X') {
        push(c, 'X');
        push(sn, 'Y');
      } else if (s == 'Y') {
        push(sn, 'X');
        push(-c, 'Y');
      } else if (s == 'Z') {
        img.outputs.push_back({-1.0, p});
      } else {
        img.outputs.push_back({1.0, p});
      }
      break;
    }
  }
  return img;
}

/// W P W^dagger, the action of the gate on a state written in the Pauli basis.
/// This is the transpose of the Heisenberg map restricted to the gate's sites.
inline ConjugationImage conjugate_state(const QuenchGate& gate, const PauliString& p) {
  if (gate.kind == QuenchGate::Kind::kSwap) return conjugate(gate, p);
  gate.validate(p.num_sites());
  static constexpr char kSym[4] = {'I', 'X', 'Y', 'Z'};
  const char s = p.at(gate.site);
  ConjugationImage img{p, {}};
  for (char src : kSym) {
    PauliString q = p;
    q.set(gate.site, src);
    for (const auto& t : conjugate(gate, q).outputs) {
      if (t.string.at(gate.site) == s) img.outputs.push_back({t.coefficient, q});
    }
  }
  return img;
}

}  // namespace pauliclass
