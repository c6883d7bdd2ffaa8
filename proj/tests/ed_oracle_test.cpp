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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pauliclass/closure.hpp"
#include "pauliclass/ed_oracle.hpp"
#include "test_support.hpp"

namespace pauliclass {
namespace {

using testing::kron_dense;
using testing::random_string;

TEST(EdOracle, DenseStringsMatchKroneckerProducts) {
  std::mt19937_64 rng(11);
  for (std::size_t L = 1; L <= 5; ++L) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto p = random_string(L, rng);
      EXPECT_LT((to_dense(p).matrix - kron_dense(p)).cwiseAbs().maxCoeff(), 1e-15) << to_word(p);
    }
  }
}

TEST(EdOracle, DenseHamiltonianIsSumOfTerms) {
  const auto h = build_xy(XYCouplings::random(5, {0.5, 1.5, 3}));
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(32, 32);
  for (const auto& t : h.terms()) expect += t.coefficient * kron_dense(t.string);
  const auto d = to_dense(h);
  EXPECT_TRUE(d.is_hermitian());
  EXPECT_LT((d.matrix - expect).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(EdOracle, SizeCap) {
  EXPECT_THROW(to_dense(PauliString(11)), DimensionError);
  EXPECT_NO_THROW(to_dense(PauliString(11), 11));
  EXPECT_THROW(exact_class_projection(Hamiltonian(7), PauliString::single(7, 0, 'X')),
               DimensionError);
}

TEST(EdOracle, GateUnitariesMatchConjugationRule) {
  const std::size_t L = 3;
  const std::vector<QuenchGate> gates = {
      QuenchGate::swap(0, 2),     QuenchGate::pauli('X', 1), QuenchGate::pauli('Y', 1),
      QuenchGate::pauli('Z', 0),  QuenchGate::phase_s(2),    QuenchGate::axis_w(1, 0.37),
      QuenchGate::axis_w(0, 0.0), QuenchGate::axis_w(2, M_PI / 4)};
  for (const auto& g : gates) {
    const auto W = gate_unitary(g, L).matrix;
    for (std::uint64_t code = 0; code < 64; ++code) {
      const auto p = testing::string_from_code(L, code);
      const Eigen::MatrixXcd lhs = W.adjoint() * kron_dense(p) * W;
      Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(8, 8);
      const auto img = conjugate(g, p);
      for (const auto& t : img.outputs) rhs += t.coefficient * kron_dense(t.string);
      EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13) << g.name() << " " << to_word(p);
      EXPECT_NEAR(img.norm_squared(), 1.0, 1e-13);
    }
  }
}

TEST(EdOracle, PrecessionInField) {
  const double h = 0.7;
  Hamiltonian H(1);
  H.add(h, PauliString::single(1, 0, 'Z'));
  const std::vector<double> times = {0.0, 0.3, 1.1, 2.5};
  const auto v = exact_heisenberg(H, PauliString::single(1, 0, 'X'), times,
                                  InitialState::named(0, "+"));
  for (std::size_t k = 0; k < times.size(); ++k) EXPECT_NEAR(v[k], std::cos(2 * h * times[k]), 1e-12);
}

TEST(EdOracle, GateFlipsPrecessingSpin) {
  const double h = 0.7, t0 = 0.5;
  Hamiltonian H(1);
  H.add(h, PauliString::single(1, 0, 'Z'));
  const std::vector<double> times = {0.0, 0.4, 0.5, 1.3};
  const std::vector<TimedGate> sched = {{t0, QuenchGate::pauli('Z', 0)}};
  const auto v = exact_heisenberg(H, PauliString::single(1, 0, 'X'), times,
                                  InitialState::named(0, "+"), sched);
  EXPECT_NEAR(v[1], std::cos(2 * h * 0.4), 1e-12);
  EXPECT_NEAR(v[2], -std::cos(2 * h * 0.5), 1e-12);
  EXPECT_NEAR(v[3], -std::cos(2 * h * 1.3), 1e-12);
}

TEST(EdOracle, RejectsUnorderedTimes) {
  Hamiltonian H(1);
  const std::vector<double> times = {0.5, 0.1};
  EXPECT_THROW(exact_heisenberg(H, PauliString::single(1, 0, 'X'), times, InitialState{}), Error);
}

TEST(EdOracle, DenseProjectionAgreesWithClosureEngine) {
  std::vector<Hamiltonian> models;
  models.push_back(build_xy(XYCouplings::random(4, {0.5, 1.5, 5})));
  models.push_back(build_xy(XYCouplings::uniform(4, 1.0, 0.0)));
  models.push_back(build_kitaev(InteractionGraph::chain(4, {1.0, 0.8, 1.2})));
  models.push_back(build_xyzz(XYZZCouplings::uniform(4, 1.0)));
  std::mt19937_64 rng(2);
  for (const auto& h : models) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto seed = random_string(4, rng);
      const auto cls = generate_class(h, seed);
      EXPECT_EQ(exact_class_projection(h, seed), cls.members()) << to_word(seed);
    }
  }
}

}  // namespace

TEST(EdOracle, XyzzSingleSiteClassesAgreeWithProjection) {
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto h = build_xyzz(XYZZCouplings::uniform(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (char a : {'X', 'Z'}) {
        const auto seed = PauliString::single(n, i, a);
        EXPECT_EQ(exact_class_projection(h, seed), generate_class(h, seed).members())
            << "n=" << n << " " << format_pauli(seed);
      }
    }
  }
}

}  // namespace pauliclass
