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

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pauliclass/errors.hpp"
#include "pauliclass/gates.hpp"
#include "pauliclass/hamiltonian.hpp"
#include "pauliclass/initial_state.hpp"
#include "pauliclass/pauli.hpp"

namespace pauliclass {

/// Largest system the dense oracle accepts by default.
inline constexpr std::size_t kDefaultOracleCap = 10;
/// Largest system accepted by the dense class projection.
inline constexpr std::size_t kProjectionCap = 6;

using Complex = std::complex<double>;

/// Dense 2^L x 2^L matrix. Basis state b has bit k equal to the Z eigenvalue
/// label of site k (0 for +1).
struct DenseOperator {
  std::size_t num_sites = 0;
  Eigen::MatrixXcd matrix;

  bool is_hermitian(double tol = 1e-12) const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }
  bool is_unitary(double tol = 1e-10) const {
    const auto d = matrix.rows();
    return (matrix.adjoint() * matrix - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <=
           tol;
  }
};

namespace detail {

inline void check_oracle_size(std::size_t L, std::size_t cap) {
  if (L > cap || L > 20) {
    throw DimensionError("dense oracle limited to L <= " + std::to_string(cap) + " (got L=" +
                         std::to_string(L) + ")");
  }
}

inline std::uint64_t low_mask(std::span<const std::uint64_t> words) { return words[0]; }

// P|b> = i^{|x&z|} (-1)^{|z&b|} |b ^ x>
inline Complex pauli_element_phase(std::uint64_t x, std::uint64_t z, std::uint64_t b) {
  static const Complex ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int k = (std::popcount(x & z) + 2 * std::popcount(z & b)) & 3;
  return ipow[k];
}

}  // namespace detail

inline DenseOperator to_dense(const PauliString& p, std::size_t cap = kDefaultOracleCap) {
  const std::size_t L = p.num_sites();
  detail::check_oracle_size(L, cap);
  const std::uint64_t x = detail::low_mask(p.x_words()), z = detail::low_mask(p.z_words());
  const std::size_t d = std::size_t{1} << L;
  DenseOperator out{L, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d))};
  for (std::uint64_t b = 0; b < d; ++b) {
    out.matrix(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) =
        detail::pauli_element_phase(x, z, b);
  }
  return out;
}

inline DenseOperator to_dense(const Hamiltonian& h, std::size_t cap = kDefaultOracleCap) {
  const std::size_t L = h.num_sites();
  detail::check_oracle_size(L, cap);
  const std::size_t d = std::size_t{1} << L;
  DenseOperator out{L, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d))};
  for (const auto& t : h.terms()) {
    const std::uint64_t x = detail::low_mask(t.string.x_words());
    const std::uint64_t z = detail::low_mask(t.string.z_words());
    for (std::uint64_t b = 0; b < d; ++b) {
      out.matrix(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) +=
          t.coefficient * detail::pauli_element_phase(x, z, b);
    }
  }
  if (!out.is_hermitian()) throw ConsistencyError("dense Hamiltonian is not Hermitian");
  return out;
}

/// Unitary W of a quench gate, so that states map as rho -> W rho W^dagger.
inline DenseOperator gate_unitary(const QuenchGate& g, std::size_t L,
                                  std::size_t cap = kDefaultOracleCap) {
  detail::check_oracle_size(L, cap);
  g.validate(L);
  const std::size_t d = std::size_t{1} << L;
  const auto D = static_cast<Eigen::Index>(d);
  DenseOperator out{L, Eigen::MatrixXcd::Zero(D, D)};
  auto single = [&](char c) { return to_dense(PauliString::single(L, g.site, c), cap).matrix; };
  switch (g.kind) {
    case QuenchGate::Kind::kSwap: {
      const std::uint64_t a = std::uint64_t{1} << g.site, c = std::uint64_t{1} << g.site2;
      for (std::uint64_t b = 0; b < d; ++b) {
        std::uint64_t s = b & ~(a | c);
        if (b & a) s |= c;
        if (b & c) s |= a;
        out.matrix(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(b)) = 1.0;
      }
      break;
    }
    case QuenchGate::Kind::kPauliX: out.matrix = single('X'); break;
    case QuenchGate::Kind::kPauliY: out.matrix = single('Y'); break;
    case QuenchGate::Kind::kPauliZ: out.matrix = single('Z'); break;
    case QuenchGate::Kind::kPhaseS: {
      const std::uint64_t a = std::uint64_t{1} << g.site;
      for (std::uint64_t b = 0; b < d; ++b) {
        out.matrix(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) =
            (b & a) ? Complex(0, 1) : Complex(1, 0);
      }
      break;
    }
    case QuenchGate::Kind::kAxisW:
      out.matrix = std::cos(g.alpha) * single('X') + std::sin(g.alpha) * single('Y');
      break;
  }
  if (!out.is_unitary()) throw ConsistencyError("gate " + g.name() + " is not unitary");
  return out;
}

/// 2^{-L} (I + b . sigma_site).
inline Eigen::MatrixXcd initial_density(const InitialState& s, std::size_t L,
                                        std::size_t cap = kDefaultOracleCap) {
  detail::check_oracle_size(L, cap);
  s.validate(L);
  const auto D = static_cast<Eigen::Index>(std::size_t{1} << L);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(D, D);
  const char axes[3] = {'X', 'Y', 'Z'};
  for (int k = 0; k < 3; ++k) {
    if (s.bloch[k] != 0.0) rho += s.bloch[k] * to_dense(PauliString::single(L, s.site, axes[k]), cap).matrix;
  }
  return rho / static_cast<double>(D);
}

/// <A(t)> = tr(rho(t) A) by exact diagonalisation, with gates applied to the
/// state at their scheduled times (a gate at time t acts before sampling t).
inline std::vector<double> exact_heisenberg(const Hamiltonian& h, const PauliString& observable,
                                            std::span<const double> times,
                                            const InitialState& init,
                                            std::span<const TimedGate> schedule = {},
                                            std::size_t cap = kDefaultOracleCap) {
  const std::size_t L = h.num_sites();
  detail::check_oracle_size(L, cap);
  if (observable.num_sites() != L) throw DimensionError("observable size mismatch");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(times[k] >= 0.0) || (k > 0 && times[k] < times[k - 1])) {
      throw Error("sample times must be non-negative and non-decreasing");
    }
  }
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (!(schedule[k].time >= 0.0) || (k > 0 && schedule[k].time < schedule[k - 1].time)) {
      throw Error("gate times must be non-negative and non-decreasing");
    }
  }

  const DenseOperator H = to_dense(h, cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.matrix);
  const Eigen::MatrixXcd& V = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::MatrixXcd A = V.adjoint() * to_dense(observable, cap).matrix * V;

  auto phases = [&](double tau) {
    Eigen::VectorXcd e(lam.size());
    for (Eigen::Index a = 0; a < lam.size(); ++a) e(a) = std::exp(Complex(0, -lam(a) * tau));
    return e;
  };
  // Density matrix in the eigenbasis at the start of the current segment.
  Eigen::MatrixXcd rho = V.adjoint() * initial_density(init, L, cap) * V;
  double t_seg = 0.0;
  std::size_t next_gate = 0;

  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    while (next_gate < schedule.size() && schedule[next_gate].time <= t) {
      const double tg = schedule[next_gate].time;
      const Eigen::VectorXcd e = phases(tg - t_seg);
      Eigen::MatrixXcd evolved = e.asDiagonal() * rho * e.conjugate().asDiagonal();
      const DenseOperator W = gate_unitary(schedule[next_gate].gate, L, cap);
      const Eigen::MatrixXcd Wt = V.adjoint() * W.matrix * V;
      rho = Wt * evolved * Wt.adjoint();
      t_seg = tg;
      ++next_gate;
    }
    const Eigen::VectorXcd e = phases(t - t_seg);
    const Eigen::MatrixXcd r = e.asDiagonal() * rho * e.conjugate().asDiagonal();
    const Complex v = (r * A).trace();
    if (std::abs(v.imag()) > 1e-9) throw ConsistencyError("expectation value is not real");
    out.push_back(v.real());
  }
  return out;
}

/// Closure of `seed` under commutation with the Hamiltonian terms, computed
/// with dense matrices and a projection onto all 4^L Pauli strings.
inline std::vector<PauliString> exact_class_projection(const Hamiltonian& h,
                                                       const PauliString& seed,
                                                       std::size_t cap = kProjectionCap) {
  const std::size_t L = h.num_sites();
  detail::check_oracle_size(L, std::min(cap, kProjectionCap));
  if (seed.num_sites() != L) throw DimensionError("seed size mismatch");
  const std::size_t d = std::size_t{1} << L;
  std::vector<Eigen::MatrixXcd> terms;
  for (const auto& t : h.terms()) terms.push_back(to_dense(t.string, cap).matrix);

  auto make = [&](std::uint64_t x, std::uint64_t z) {
    PauliString p(L);
    for (std::size_t k = 0; k < L; ++k) {
      const bool xb = (x >> k) & 1, zb = (z >> k) & 1;
      p.set(k, xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
    }
    return p;
  };

  std::set<PauliString> found{seed};
  std::vector<PauliString> frontier{seed};
  while (!frontier.empty()) {
    std::vector<PauliString> next;
    for (const auto& p : frontier) {
      const Eigen::MatrixXcd P = to_dense(p, cap).matrix;
      for (const auto& T : terms) {
        const Eigen::MatrixXcd C = T * P - P * T;
        if (C.cwiseAbs().maxCoeff() < 1e-12) continue;
        for (std::uint64_t x = 0; x < d; ++x) {
          Eigen::VectorXcd diag(static_cast<Eigen::Index>(d));
          for (std::uint64_t b = 0; b < d; ++b) {
            diag(static_cast<Eigen::Index>(b)) =
                C(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b));
          }
          if (diag.cwiseAbs().maxCoeff() < 1e-12) continue;
          for (std::uint64_t z = 0; z < d; ++z) {
            Complex acc = 0;
            for (std::uint64_t b = 0; b < d; ++b) {
              acc += std::conj(detail::pauli_element_phase(x, z, b)) *
                     diag(static_cast<Eigen::Index>(b));
            }
            if (std::abs(acc) / static_cast<double>(d) > 1e-10) {
              auto q = make(x, z);
              if (found.insert(q).second) next.push_back(q);
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace pauliclass
