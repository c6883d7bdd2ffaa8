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
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "pauliclass/detail/string_table.hpp"
#include "pauliclass/errors.hpp"
#include "pauliclass/hamiltonian.hpp"
#include "pauliclass/pauli.hpp"

namespace pauliclass {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// Pauli strings reachable from a seed by repeated commutation with the
/// Hamiltonian strings. Members are sorted once the closure finishes, so
/// member(i) and index_of() are reproducible across runs.
class EquivalenceClass {
 public:
  EquivalenceClass() = default;
  EquivalenceClass(PauliString seed, detail::StringTable table, bool complete, std::size_t depth)
      : seed_(seed), table_(std::move(table)), complete_(complete), depth_(depth) {}

  std::size_t num_sites() const { return seed_.num_sites(); }
  const PauliString& seed() const { return seed_; }
  bool complete() const { return complete_; }

  /// Number of members found. Equal to the OED when complete(), otherwise a
  /// lower bound.
  std::size_t size() const { return table_.size(); }

  std::optional<std::size_t> oed() const {
    return complete_ ? std::optional<std::size_t>(size()) : std::nullopt;
  }

  /// Number of commutation rounds needed to reach the farthest member.
  std::size_t depth() const { return depth_; }

  PauliString member(std::size_t i) const { return table_.get(i); }

  std::vector<PauliString> members() const {
    std::vector<PauliString> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(member(i));
    return out;
  }

  std::optional<std::size_t> index_of(const PauliString& p) const { return table_.find(p); }
  bool contains(const PauliString& p) const { return index_of(p).has_value(); }

  const detail::StringTable& table() const { return table_; }

 private:
  PauliString seed_;
  detail::StringTable table_;
  bool complete_ = false;
  std::size_t depth_ = 0;
};

namespace detail {

struct NoExtraNeighbours {
  template <class Emit>
  void operator()(const PauliString&, Emit&&) const {}
  static constexpr bool kActive = false;
};

/// Breadth-first closure of `seeds` under commutation with `generators`.
///
/// `extra(p, emit)` may emit further neighbours of p (gate images); it is
/// only consulted when Extra::kActive is true. Stops with complete == false
/// as soon as a new member would exceed `budget`.
template <class Extra = NoExtraNeighbours>
EquivalenceClass bfs_closure(std::size_t num_sites, std::span<const PauliString> generators,
                             std::span<const PauliString> seeds, const PauliString& label,
                             std::size_t budget, const Extra& extra = {}) {
  if (budget < 1) throw Error("closure budget must be at least 1");
  StringTable table(num_sites);
  const std::size_t w = table.words();
  const std::size_t stride = table.stride();

  std::vector<std::uint64_t> gens;
  gens.reserve(generators.size() * stride);
  for (const auto& g : generators) {
    if (g.num_sites() != num_sites) throw DimensionError("generator size mismatch");
    std::array<std::uint64_t, StringTable::kMaxRowWords> buf{};
    StringTable::pack(g, std::span(buf).first(stride));
    gens.insert(gens.end(), buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(stride));
  }

  bool complete = true;
  for (const auto& s : seeds) {
    if (s.num_sites() != num_sites) throw DimensionError("seed size mismatch");
    if (table.insert(s, table.size() < budget).rejected) complete = false;
  }

  std::size_t head = 0;
  std::size_t layer_end = table.size();
  std::size_t depth = 0;
  std::array<std::uint64_t, StringTable::kMaxRowWords> cur{};
  std::array<std::uint64_t, StringTable::kMaxRowWords> out{};
  const std::span<const std::uint64_t> out_row(out.data(), stride);

  while (complete && head < table.size()) {
    if (head == layer_end) {
      ++depth;
      layer_end = table.size();
    }
    const auto r = table.row(head);
    std::copy(r.begin(), r.end(), cur.begin());
    ++head;
    const std::uint64_t* g = gens.data();
    for (std::size_t k = 0; k < generators.size(); ++k, g += stride) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < w; ++i) acc ^= (cur[i] & g[w + i]) ^ (cur[w + i] & g[i]);
      if (!(std::popcount(acc) & 1)) continue;
      for (std::size_t i = 0; i < stride; ++i) out[i] = cur[i] ^ g[i];
      if (table.insert(out_row, table.size() < budget).rejected) {
        complete = false;
        break;
      }
    }
    if constexpr (Extra::kActive) {
      if (complete) {
        const PauliString p = PauliString::from_masks(
            num_sites, std::span<const std::uint64_t>(cur.data(), w),
            std::span<const std::uint64_t>(cur.data() + w, w));
        extra(p, [&](const PauliString& q) {
          if (complete && table.insert(q, table.size() < budget).rejected) complete = false;
        });
      }
    }
  }
  table.sort();
  return EquivalenceClass(label, std::move(table), complete, depth);
}

inline std::vector<PauliString> strings_of(const Hamiltonian& h) {
  std::vector<PauliString> out;
  out.reserve(h.size());
  for (const auto& t : h.terms()) out.push_back(t.string);
  return out;
}

}  // namespace detail

/// Equivalence class of `seed` under `h`. Terms with zero coefficient are
/// never part of a Hamiltonian, so only moving strings generate the class.
inline EquivalenceClass generate_class(const Hamiltonian& h, const PauliString& seed,
                                       std::size_t budget = kDefaultBudget) {
  if (seed.num_sites() != h.num_sites()) {
    throw DimensionError("seed on " + std::to_string(seed.num_sites()) + " sites, Hamiltonian on " +
                         std::to_string(h.num_sites()));
  }
  const auto gens = detail::strings_of(h);
  return detail::bfs_closure(h.num_sites(), gens, std::span(&seed, 1), seed, budget);
}

struct OedResult {
  std::size_t count = 0;  // exact OED when complete, lower bound otherwise
  bool complete = false;
};

inline OedResult oed(const Hamiltonian& h, const PauliString& seed,
                     std::size_t budget = kDefaultBudget) {
  const auto cls = generate_class(h, seed, budget);
  return {cls.size(), cls.complete()};
}

/// True iff `p` belongs to the complete class `cls`.
inline bool class_membership(const EquivalenceClass& cls, const PauliString& p) {
  if (!cls.complete()) throw Unsupported("membership query on an incomplete class");
  return cls.contains(p);
}

struct Partition {
  std::vector<EquivalenceClass> classes;
  std::size_t num_classes() const { return classes.size(); }
};

inline constexpr std::size_t kDefaultPartitionCap = 10;

/// Split all 4^L strings into equivalence classes, ordered by
/// (cardinality, first member).
inline Partition partition_all(const Hamiltonian& h, std::size_t max_sites = kDefaultPartitionCap) {
  const std::size_t L = h.num_sites();
  if (L > max_sites || L > 15) {
    throw DimensionError("partition of 4^" + std::to_string(L) + " strings exceeds the cap L <= " +
                         std::to_string(std::min<std::size_t>(max_sites, 15)));
  }
  const std::uint64_t total = std::uint64_t{1} << (2 * L);
  const std::uint64_t site_mask = (std::uint64_t{1} << L) - 1;
  std::vector<bool> assigned(total, false);
  const auto gens = detail::strings_of(h);
  Partition part;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (assigned[code]) continue;
    const std::uint64_t x = code & site_mask;
    const std::uint64_t z = code >> L;
    const auto seed = PauliString::from_masks(L, std::span(&x, 1), std::span(&z, 1));
    auto cls = detail::bfs_closure(L, gens, std::span(&seed, 1), seed, total);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const auto r = cls.table().row(i);
      assigned[r[0] | (r[1] << L)] = true;
    }
    part.classes.push_back(std::move(cls));
  }
  std::sort(part.classes.begin(), part.classes.end(),
            [](const EquivalenceClass& a, const EquivalenceClass& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.member(0) < b.member(0);
            });
  return part;
}

}  // namespace pauliclass
