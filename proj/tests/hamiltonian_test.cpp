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

#include "pauliclass/hamiltonian.hpp"

#include <set>

#include "gtest/gtest.h"

using namespace pauliclass;

namespace {

std::set<std::string> words(const Hamiltonian& h) {
  std::set<std::string> out;
  for (const auto& t : h.terms()) out.insert(format_pauli(t.string));
  return out;
}

}  // namespace

TEST(build_xy, open_chain_term_count) {
  const auto h = build_xy(XYCouplings::uniform(3, 1.0, 1.0));
  EXPECT_EQ(h.size(), 11u);
  for (std::size_t L = 2; L <= 12; ++L) {
    const auto hr = build_xy(XYCouplings::random(L, {0.5, 1.5, L}));
    EXPECT_EQ(hr.size(), 4 * (L - 1) + L);
    for (const auto& t : hr.terms()) {
      EXPECT_LE(t.string.weight(), 2u);
      EXPECT_TRUE(std::isfinite(t.coefficient));
    }
  }
}

TEST(build_xy, zero_couplings_are_dropped) {
  XYCouplings c = XYCouplings::uniform(2, 0.0, 0.0);
  c.jxx[0] = 1.0;
  const auto h = build_xy(c);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(format_pauli(h.terms()[0].string), "X1 X2");
}

TEST(build_xy, figure_two_setup) {
  const auto h = build_xy(XYCouplings::uniform(12, 1.0, 10.0));
  EXPECT_EQ(h.size(), 4u * 11 + 12);
  EXPECT_DOUBLE_EQ(h.l1_norm(), 44.0 + 120.0);
}

TEST(build_xy, periodic_adds_wraparound_bond) {
  const auto h = build_xy(XYCouplings::uniform(4, 1.0, 1.0, Boundary::kPeriodic));
  EXPECT_EQ(h.size(), 4u * 4 + 4);
  EXPECT_TRUE(words(h).count("X1 Y4"));
  EXPECT_TRUE(words(h).count("Y1 X4"));
  EXPECT_THROW(build_xy(XYCouplings::uniform(2, 1.0, 1.0, Boundary::kPeriodic)), ModelError);
}

TEST(build_xy, length_mismatch) {
  auto c = XYCouplings::uniform(4, 1.0, 1.0);
  c.jyy.pop_back();
  EXPECT_THROW(build_xy(c), ModelError);
  c = XYCouplings::uniform(4, 1.0, 1.0);
  c.hz.push_back(1.0);
  EXPECT_THROW(build_xy(c), ModelError);
}

TEST(hamiltonian, rejects_bad_terms) {
  Hamiltonian h(2);
  h.add(1.0, parse_pauli("X1", 2));
  EXPECT_THROW(h.add(2.0, parse_pauli("X1", 2)), ModelError);
  EXPECT_THROW(h.add(1.0, parse_pauli("", 2)), ModelError);
  EXPECT_THROW(h.add(std::nan(""), parse_pauli("Z1", 2)), ModelError);
  EXPECT_THROW(h.add(1.0, parse_pauli("Z1", 3)), DimensionError);
  h.add(0.0, parse_pauli("Z2", 2));
  EXPECT_EQ(h.size(), 1u);
}

TEST(random_couplings, reproducible_and_in_range) {
  const auto a = XYCouplings::random(6, {-2.0, -1.0, 42});
  const auto b = XYCouplings::random(6, {-2.0, -1.0, 42});
  EXPECT_EQ(a.jxx, b.jxx);
  EXPECT_EQ(a.hz, b.hz);
  for (double v : a.jyx) {
    EXPECT_GE(v, -2.0);
    EXPECT_LE(v, -1.0);
  }
  EXPECT_THROW(XYCouplings::random(3, {1.0, 1.0, 1}), ModelError);
}

TEST(build_kitaev, path_with_two_colors) {
  const InteractionGraph g(3, {{0, 1, EdgeColor::kX, 1.0}, {1, 2, EdgeColor::kY, 1.0}});
  const auto h = build_kitaev(g);
  EXPECT_EQ(words(h), (std::set<std::string>{"X1 X2", "Y2 Y3"}));
}

TEST(build_kitaev, improper_coloring_is_rejected) {
  try {
    InteractionGraph(3, {{0, 1, EdgeColor::kX, 1.0}, {1, 2, EdgeColor::kX, 1.0}});
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_STREQ(e.what(), "improper coloring at vertex 2");
  }
}

TEST(build_kitaev, degree_and_structure_errors) {
  EXPECT_THROW(InteractionGraph(5, {{0, 1, EdgeColor::kX, 1.0},
                                    {0, 2, EdgeColor::kY, 1.0},
                                    {0, 3, EdgeColor::kZ, 1.0},
                                    {0, 4, EdgeColor::kX, 1.0}}),
               ModelError);
  EXPECT_THROW(InteractionGraph(2, {{0, 0, EdgeColor::kX, 1.0}}), ModelError);
  EXPECT_THROW(InteractionGraph(2, {{0, 1, EdgeColor::kX, 1.0}, {1, 0, EdgeColor::kY, 1.0}}),
               ModelError);
  EXPECT_THROW(InteractionGraph(2, {{0, 2, EdgeColor::kX, 1.0}}), ModelError);
  EXPECT_THROW(InteractionGraph(2, {{0, 1, EdgeColor::kX, 0.0}}), ModelError);
}

TEST(build_kitaev, chain_has_one_term_per_edge) {
  const auto g = InteractionGraph::chain(30, std::vector<double>(29, 1.0));
  const auto h = build_kitaev(g);
  EXPECT_EQ(h.size(), g.edges().size());
  EXPECT_EQ(h.size(), 29u);
  EXPECT_TRUE(words(h).count("X1 X2"));
  EXPECT_TRUE(words(h).count("Y2 Y3"));
  EXPECT_TRUE(words(h).count("Z3 Z4"));
  EXPECT_TRUE(words(h).count("X4 X5"));
  EXPECT_EQ(g.cycle_rank(), 0u);
}

TEST(add_loops, counts_independent_cycles) {
  const auto chain = InteractionGraph::chain(12, std::vector<double>(11, 1.0));
  // Interior vertex v of an x,y,z chain has its free color at (v + 1) % 3,
  // so chords must join vertices congruent mod 3.
  const auto one = add_loops(chain, {{4, 7, EdgeColor::kZ, 1.0}});
  EXPECT_EQ(one.added_loops, 1u);
  const auto two = add_loops(chain, {{1, 4, EdgeColor::kZ, 1.0}, {5, 8, EdgeColor::kX, 1.0}});
  EXPECT_EQ(two.added_loops, 2u);
  EXPECT_EQ(build_kitaev(two.graph).size(), 13u);
  EXPECT_THROW(add_loops(chain, {{4, 7, EdgeColor::kX, 1.0}}), ModelError);
}

TEST(build_xyzz, small_chains) {
  EXPECT_EQ(words(build_xyzz(XYZZCouplings::uniform(4, 1.0))),
            (std::set<std::string>{"X1 X2", "Y1 Y2", "Z2 Z3", "X3 X4", "Y3 Y4"}));
  EXPECT_EQ(words(build_xyzz(XYZZCouplings::uniform(2, 1.0))),
            (std::set<std::string>{"X1 X2", "Y1 Y2"}));
  EXPECT_EQ(words(build_xyzz(XYZZCouplings::uniform(5, 1.0))),
            (std::set<std::string>{"X1 X2", "Y1 Y2", "Z2 Z3", "X3 X4", "Y3 Y4", "Z4 Z5"}));
  auto c = XYZZCouplings::uniform(5, 1.0);
  c.jz.pop_back();
  EXPECT_THROW(build_xyzz(c), ModelError);
}
