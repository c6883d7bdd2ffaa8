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

#include "pauliclass/closure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gtest/gtest.h"

#include "test_support.hpp"

using namespace pauliclass;
using pauliclass::testing::string_from_code;

namespace {

Hamiltonian xy(std::size_t L, std::uint64_t seed = 1, Boundary b = Boundary::kOpen) {
  return build_xy(XYCouplings::random(L, {0.3, 1.7, seed}, b));
}

PauliString P(const char* text, std::size_t L) { return parse_pauli(text, L); }

std::set<std::string> member_words(const EquivalenceClass& c) {
  std::set<std::string> out;
  for (const auto& m : c.members()) out.insert(to_word(m));
  return out;
}

/// The 2L strings Z..Z X and Z..Z Y.
std::set<std::string> majorana_words(std::size_t L) {
  std::set<std::string> out;
  for (std::size_t n = 0; n < L; ++n) {
    for (char end : {'X', 'Y'}) {
      std::string w(L, 'I');
      for (std::size_t k = 0; k < n; ++k) w[k] = 'Z';
      w[n] = end;
      out.insert(w);
    }
  }
  return out;
}

/// Components of the "differ by one anticommuting Hamiltonian string" graph
/// over all 4^L strings, by union-find. Independent of the BFS code path.
std::vector<std::set<std::string>> brute_force_classes(const Hamiltonian& h) {
  const std::size_t L = h.num_sites();
  const std::uint64_t n = std::uint64_t{1} << (2 * L);
  std::vector<std::uint64_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::map<std::string, std::uint64_t> code_of;
  std::vector<PauliString> strings;
  for (std::uint64_t c = 0; c < n; ++c) {
    strings.push_back(string_from_code(L, c));
    code_of[to_word(strings.back())] = c;
  }
  for (std::uint64_t c = 0; c < n; ++c) {
    for (const auto& t : h.terms()) {
      const auto r = commutator(t.string, strings[c]);
      if (r.is_zero()) continue;
      const auto a = find(c), b = find(code_of.at(to_word(r.string)));
      if (a != b) parent[a] = b;
    }
  }
  std::map<std::uint64_t, std::set<std::string>> groups;
  for (std::uint64_t c = 0; c < n; ++c) groups[find(c)].insert(to_word(strings[c]));
  std::vector<std::set<std::string>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

void expect_closed(const Hamiltonian& h, const EquivalenceClass& c) {
  ASSERT_TRUE(c.complete());
  for (const auto& m : c.members()) {
    for (const auto& t : h.terms()) {
      const auto r = commutator(t.string, m);
      if (!r.is_zero()) EXPECT_TRUE(c.contains(r.string)) << to_word(m) << " leaks";
    }
  }
}

}  // namespace

TEST(generate_class, majorana_strings) {
  for (std::size_t L = 1; L <= 12; ++L) {
    const auto c = generate_class(xy(L), PauliString::single(L, 0, 'X'));
    EXPECT_TRUE(c.complete());
    EXPECT_EQ(c.oed(), 2 * L);
    EXPECT_EQ(member_words(c), majorana_words(L));
  }
}

TEST(generate_class, onsager_count) {
  EXPECT_EQ(generate_class(xy(3), P("Z2", 3)).oed(), 15u);
  for (std::size_t L = 2; L <= 10; ++L) {
    for (std::size_t i = 0; i < L; ++i) {
      EXPECT_EQ(generate_class(xy(L, 5), PauliString::single(L, i, 'Z')).oed(), 2 * L * L - L);
    }
  }
}

TEST(generate_class, singleton_when_seed_commutes) {
  Hamiltonian h(1);
  h.add(0.7, P("Z1", 1));
  const auto c = generate_class(h, P("Z1", 1));
  EXPECT_EQ(c.oed(), 1u);
  EXPECT_EQ(c.depth(), 0u);
  EXPECT_EQ(c.member(0), P("Z1", 1));
}

TEST(generate_class, identity_is_its_own_class) {
  const auto c = generate_class(xy(4), P("", 4));
  EXPECT_EQ(c.oed(), 1u);
  EXPECT_TRUE(c.member(0).is_identity());
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_FALSE(generate_class(xy(4), PauliString::single(4, i, 'X')).contains(P("", 4)));
  }
}

TEST(generate_class, x3_on_three_sites) {
  EXPECT_EQ(generate_class(xy(3), P("X3", 3)).oed(), 6u);
}

TEST(generate_class, large_chains) {
  const auto h = xy(100, 9);
  EXPECT_EQ(oed(h, PauliString::single(100, 0, 'X')).count, 200u);
  const auto r = oed(h, PauliString::single(100, 4, 'Z'));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.count, 19'900u);
}

TEST(generate_class, members_are_sorted_and_indexed) {
  const auto c = generate_class(xy(5), P("Z3", 5));
  for (std::size_t i = 0; i + 1 < c.size(); ++i) EXPECT_LT(c.member(i), c.member(i + 1));
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.index_of(c.member(i)), i);
  EXPECT_EQ(c.seed(), P("Z3", 5));
}

TEST(generate_class, budget_exhaustion_is_flagged) {
  const auto h = build_xyzz(XYZZCouplings::uniform(8, 1.0));
  const auto c = generate_class(h, P("X1", 8), 10);
  EXPECT_FALSE(c.complete());
  EXPECT_EQ(c.size(), 10u);
  EXPECT_FALSE(c.oed().has_value());
  EXPECT_TRUE(c.contains(P("X1", 8)));
  EXPECT_THROW(class_membership(c, P("X1", 8)), Unsupported);
  const auto r = oed(h, P("X1", 8), 10);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.count, 10u);
}

TEST(generate_class, size_mismatch) {
  EXPECT_THROW(generate_class(xy(3), P("X1", 4)), DimensionError);
}

TEST(class_membership, examples) {
  const auto c = generate_class(xy(3), P("X1", 3));
  EXPECT_TRUE(class_membership(c, P("Z1 Z2 X3", 3)));
  EXPECT_FALSE(class_membership(c, P("Z1", 3)));
  EXPECT_TRUE(class_membership(c, c.seed()));
}

TEST(generate_class, closure_holds_for_every_model_family) {
  for (std::size_t L = 2; L <= 6; ++L) {
    const std::vector<Hamiltonian> models = {
        xy(L, 2), xy(std::max<std::size_t>(L, 3), 2, Boundary::kPeriodic),
        build_kitaev(InteractionGraph::chain(L, std::vector<double>(L - 1, 0.9))),
        build_xyzz(XYZZCouplings::random(L, {0.5, 1.5, 4}))};
    for (const auto& h : models) {
      for (std::size_t i = 0; i < h.num_sites(); ++i) {
        for (char s : {'X', 'Y', 'Z'}) {
          expect_closed(h, generate_class(h, PauliString::single(h.num_sites(), i, s)));
        }
      }
    }
  }
}

TEST(generate_class, agrees_with_brute_force_components) {
  for (std::size_t L = 2; L <= 5; ++L) {
    const std::vector<Hamiltonian> models = {
        xy(L, 3), build_kitaev(InteractionGraph::chain(L, std::vector<double>(L - 1, 1.1))),
        build_xyzz(XYZZCouplings::random(L, {0.5, 1.5, 8}))};
    for (const auto& h : models) {
      for (const auto& comp : brute_force_classes(h)) {
        const auto seed = parse_pauli(*comp.rbegin(), L);
        EXPECT_EQ(member_words(generate_class(h, seed)), comp);
      }
    }
  }
}

TEST(generate_class, relation_is_symmetric) {
  const auto h = build_xyzz(XYZZCouplings::random(6, {0.5, 1.5, 1}));
  const auto fwd = generate_class(h, P("Z1", 6));
  for (std::size_t i = 0; i < fwd.size(); i += 7) {
    EXPECT_TRUE(generate_class(h, fwd.member(i)).contains(P("Z1", 6)));
  }
}

TEST(generate_class, coupling_values_do_not_matter) {
  for (std::size_t L = 3; L <= 7; ++L) {
    for (char s : {'X', 'Z'}) {
      const auto seed = PauliString::single(L, L / 2, s);
      EXPECT_EQ(member_words(generate_class(xy(L, 10), seed)),
                member_words(generate_class(xy(L, 20), seed)));
      const auto a = build_xyzz(XYZZCouplings::random(L, {-1.0, 1.0, 10}));
      const auto b = build_xyzz(XYZZCouplings::random(L, {2.0, 3.0, 11}));
      EXPECT_EQ(member_words(generate_class(a, seed)), member_words(generate_class(b, seed)));
    }
  }
}

TEST(generate_class, x_class_peaks_mid_chain) {
  for (std::size_t L = 2; L <= 8; ++L) {
    const auto h = xy(L, 6);
    std::size_t prev = 0;
    for (std::size_t i = 0; i < (L + 1) / 2; ++i) {
      const auto d = *generate_class(h, PauliString::single(L, i, 'X')).oed();
      EXPECT_GE(d, prev) << "L=" << L << " i=" << i + 1;
      prev = d;
    }
  }
}

TEST(partition_all, xy_three_sites) {
  const auto part = partition_all(xy(3));
  EXPECT_EQ(part.num_classes(), 7u);
  std::size_t total = 0;
  for (const auto& c : part.classes) total += c.size();
  EXPECT_EQ(total, 64u);
  EXPECT_EQ(part.classes.front().size(), 1u);
}

TEST(partition_all, xy_mirror_relation) {
  const std::size_t L = 4;
  const auto h = xy(L, 12);
  std::vector<std::size_t> dims;  // D^0..D^{2L}
  dims.push_back(1);
  for (std::size_t n = 1; n <= L; ++n) {
    dims.push_back(*generate_class(h, PauliString::single(L, n - 1, 'X')).oed());
    PauliString zs(L);
    for (std::size_t m = 0; m < n; ++m) zs.set(m, 'Z');
    dims.push_back(*generate_class(h, zs).oed());
  }
  for (std::size_t n = 0; n <= 2 * L; ++n) EXPECT_EQ(dims[n], dims[2 * L - n]) << n;

  const auto part = partition_all(h);
  EXPECT_EQ(part.num_classes(), 2 * L + 1);
  std::multiset<std::size_t> sizes, expected(dims.begin(), dims.end());
  for (const auto& c : part.classes) sizes.insert(c.size());
  EXPECT_EQ(sizes, expected);
}

TEST(partition_all, empty_hamiltonian_gives_singletons) {
  const Hamiltonian h(3);
  const auto part = partition_all(h);
  EXPECT_EQ(part.num_classes(), 64u);
  for (const auto& c : part.classes) EXPECT_EQ(c.size(), 1u);
}

TEST(partition_all, classes_are_disjoint_and_sorted) {
  const auto h = build_xyzz(XYZZCouplings::uniform(5, 1.0));
  const auto part = partition_all(h);
  std::set<std::string> seen;
  std::size_t total = 0;
  for (std::size_t k = 0; k < part.num_classes(); ++k) {
    const auto& c = part.classes[k];
    total += c.size();
    for (const auto& w : member_words(c)) EXPECT_TRUE(seen.insert(w).second) << w;
    if (k > 0) {
      const auto& prev = part.classes[k - 1];
      EXPECT_TRUE(prev.size() < c.size() ||
                  (prev.size() == c.size() && prev.member(0) < c.member(0)));
    }
  }
  EXPECT_EQ(total, 1024u);
}

TEST(partition_all, respects_the_cap) {
  EXPECT_THROW(partition_all(xy(11)), DimensionError);
  EXPECT_THROW(partition_all(xy(6), 5), DimensionError);
}
