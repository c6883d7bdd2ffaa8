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
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pauliclass/closure.hpp"
#include "pauliclass/dim_poly.hpp"
#include "pauliclass/dynamics.hpp"
#include "pauliclass/errors.hpp"
#include "pauliclass/gates.hpp"
#include "pauliclass/hamiltonian.hpp"
#include "pauliclass/initial_state.hpp"

namespace pauliclass {

namespace detail {

struct GateNeighbours {
  static constexpr bool kActive = true;
  std::span<const QuenchGate> gates;

  template <class Emit>
  void operator()(const PauliString& p, Emit&& emit) const {
    for (const auto& g : gates) {
      for (const auto& t : conjugate(g, p).outputs) emit(t.string);
    }
  }
};

inline void check_gates(std::span<const QuenchGate> gates, std::size_t L) {
  for (const auto& g : gates) g.validate(L);
}

inline EquivalenceClass union_of(std::size_t L, const PauliString& label,
                                 const std::vector<const EquivalenceClass*>& parts,
                                 std::size_t depth) {
  StringTable table(L);
  for (const auto* c : parts) {
    for (std::size_t i = 0; i < c->size(); ++i) table.insert(c->table().row(i), true);
  }
  table.sort();
  return EquivalenceClass(label, std::move(table), true, depth);
}

}  // namespace detail

/// Closure under commutation with the Hamiltonian strings and under every
/// gate's conjugation, each applicable any number of times.
inline EquivalenceClass extended_class(const Hamiltonian& h, std::span<const QuenchGate> gates,
                                       const PauliString& seed,
                                       std::size_t budget = kDefaultBudget) {
  if (seed.num_sites() != h.num_sites()) throw DimensionError("seed size mismatch");
  detail::check_gates(gates, h.num_sites());
  const auto gens = detail::strings_of(h);
  return detail::bfs_closure(h.num_sites(), gens, std::span(&seed, 1), seed, budget,
                             detail::GateNeighbours{gates});
}

/// Strings reachable when the gates act once each, in the given order,
/// separated by Hamiltonian evolution: S_0 = cl(seed),
/// S_k = cl(support of gate_k applied to S_{k-1}); returns the union.
inline EquivalenceClass scheduled_class(const Hamiltonian& h, std::span<const QuenchGate> gates,
                                        const PauliString& seed,
                                        std::size_t budget = kDefaultBudget) {
  const std::size_t L = h.num_sites();
  if (seed.num_sites() != L) throw DimensionError("seed size mismatch");
  detail::check_gates(gates, L);
  const auto gens = detail::strings_of(h);
  std::vector<EquivalenceClass> layers;
  layers.push_back(detail::bfs_closure(L, gens, std::span(&seed, 1), seed, budget));
  for (const auto& g : gates) {
    const auto& prev = layers.back();
    if (!prev.complete()) break;
    std::vector<PauliString> seeds;
    seeds.reserve(prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i) {
      for (const auto& t : conjugate(g, prev.member(i)).outputs) seeds.push_back(t.string);
    }
    layers.push_back(detail::bfs_closure(L, gens, seeds, seed, budget));
  }
  for (const auto& c : layers) {
    if (!c.complete()) return EquivalenceClass(seed, c.table(), false, c.depth());
  }
  std::vector<const EquivalenceClass*> parts;
  std::size_t depth = 0;
  for (const auto& c : layers) {
    parts.push_back(&c);
    depth = std::max(depth, c.depth());
  }
  auto out = detail::union_of(L, seed, parts, depth);
  if (out.size() > budget) {
    return EquivalenceClass(seed, out.table(), false, depth);
  }
  return out;
}

/// True when adding the gates leaves the class of `seed` unchanged.
inline bool is_equivalence_preserving(const Hamiltonian& h, std::span<const QuenchGate> gates,
                                      const PauliString& seed,
                                      std::size_t budget = kDefaultBudget) {
  const auto plain = generate_class(h, seed, budget);
  const auto ext = extended_class(h, gates, seed, budget);
  if (!plain.complete() || !ext.complete()) {
    throw BudgetExhausted("class exceeds the budget of " + std::to_string(budget));
  }
  return plain.members() == ext.members();
}

struct QuenchSample {
  double t = 0.0;
  double value = 0.0;
  double norm_drift = 0.0;
  std::size_t basis_size = 0;
};

/// <A(t)> for the state 2^{-L}(I + b.sigma_site) evolved under H, with the
/// scheduled gates applied to the state at their times (before sampling a
/// coinciding output time). The state is propagated in the Pauli basis on a
/// subspace rebuilt after every gate.
inline std::vector<QuenchSample> quenched_evolution(const Hamiltonian& h,
                                                    std::span<const TimedGate> schedule,
                                                    const PauliString& observable,
                                                    const InitialState& init,
                                                    std::span<const double> times,
                                                    std::size_t budget = kDefaultBudget,
                                                    const EvolveOptions& opt = {}) {
  const std::size_t L = h.num_sites();
  if (observable.num_sites() != L) throw DimensionError("observable size mismatch");
  init.validate(L);
  detail::check_times(times);
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    schedule[k].gate.validate(L);
    if (!(schedule[k].time >= 0.0) || !std::isfinite(schedule[k].time) ||
        (k > 0 && schedule[k].time < schedule[k - 1].time)) {
      throw Error("gate times must be finite, non-negative and non-decreasing");
    }
  }
  const auto gens = detail::strings_of(h);
  auto close = [&](const std::vector<PauliString>& seeds) {
    auto cls = std::make_shared<const EquivalenceClass>(
        detail::bfs_closure(L, gens, seeds, seeds.front(), budget));
    if (!cls->complete()) {
      throw BudgetExhausted("quench subspace exceeds the budget of " + std::to_string(budget));
    }
    return cls;
  };

  std::vector<PauliString> seeds{PauliString(L)};
  const char axes[3] = {'X', 'Y', 'Z'};
  for (int a = 0; a < 3; ++a) {
    if (init.bloch[a] != 0.0) seeds.push_back(PauliString::single(L, init.site, axes[a]));
  }
  auto basis = close(seeds);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
  r(static_cast<Eigen::Index>(*basis->index_of(PauliString(L)))) = 1.0;
  for (int a = 0; a < 3; ++a) {
    if (init.bloch[a] != 0.0) {
      r(static_cast<Eigen::Index>(*basis->index_of(PauliString::single(L, init.site, axes[a])))) =
          init.bloch[a];
    }
  }
  const double norm0 = r.norm();

  std::vector<QuenchSample> out;
  out.reserve(times.size());
  std::size_t k = 0, gi = 0;
  double seg_start = 0.0;
  while (true) {
    const AdjointGenerator gen = build_generator(h, basis);
    const double seg_end =
        gi < schedule.size() ? schedule[gi].time : std::numeric_limits<double>::infinity();
    std::vector<double> local;
    std::size_t first = k;
    while (k < times.size() && times[k] < seg_end) local.push_back(times[k++] - seg_start);
    const std::size_t n_out = local.size();
    const bool gate_pending = gi < schedule.size();
    if (gate_pending) local.push_back(seg_end - seg_start);
    // Output times before seg_start cannot occur: gate times are sorted and
    // every earlier time was consumed by a previous segment.
    for (auto& t : local) t = std::max(t, 0.0);
    const auto idx = basis->index_of(observable);
    Eigen::VectorXd r_end = r;
    if (!local.empty()) {
      propagate(
          gen, r, local,
          [&](std::size_t j, double, const Eigen::VectorXd& f, double) {
            if (j < n_out) {
              const double v = idx ? f(static_cast<Eigen::Index>(*idx)) : 0.0;
              out.push_back({times[first + j], v, std::abs(f.norm() - norm0), basis->size()});
            } else {
              r_end = f;
            }
          },
          opt, -1.0);
    }
    if (!gate_pending) break;

    const QuenchGate& g = schedule[gi].gate;
    std::vector<std::vector<ImageTerm>> images(basis->size());
    std::vector<PauliString> next_seeds;
    for (std::size_t m = 0; m < basis->size(); ++m) {
      images[m] = conjugate_state(g, basis->member(m)).outputs;
      for (const auto& t : images[m]) next_seeds.push_back(t.string);
    }
    auto next = close(next_seeds);
    Eigen::VectorXd r_next = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(next->size()));
    for (std::size_t m = 0; m < images.size(); ++m) {
      const double c = r_end(static_cast<Eigen::Index>(m));
      if (c == 0.0) continue;
      for (const auto& t : images[m]) {
        r_next(static_cast<Eigen::Index>(*next->index_of(t.string))) += t.coefficient * c;
      }
    }
    basis = std::move(next);
    r = std::move(r_next);
    seg_start = seg_end;
    ++gi;
  }
  return out;
}

/// Sizes of the scheduled class of `seed` for each system size, followed by
/// degree detection. `bonds` are 0-based (i, i+1) SWAP positions.
struct SwapGrowth {
  std::vector<std::int64_t> sizes;
  std::vector<BigInt> dimensions;
  PolynomialFit fit;
};

inline SwapGrowth swap_growth_study(std::span<const std::int64_t> sizes,
                                    std::span<const std::size_t> bonds,
                                    std::size_t seed_site = 0,
                                    std::size_t budget = kDefaultBudget) {
  SwapGrowth out;
  for (auto L : sizes) {
    if (L < 2) throw DimensionError("system size must be at least 2");
    const auto n = static_cast<std::size_t>(L);
    for (auto b : bonds) {
      if (b + 1 >= n) throw DimensionError("SWAP bond outside the chain at L=" + std::to_string(L));
    }
    if (seed_site >= n) throw DimensionError("seed site outside the chain");
    const auto h = build_xy(XYCouplings::uniform(n, 1.0, 1.0));
    std::vector<QuenchGate> gates;
    for (auto b : bonds) gates.push_back(QuenchGate::swap(b, b + 1));
    const auto cls = scheduled_class(h, gates, PauliString::single(n, seed_site, 'Z'), budget);
    if (!cls.complete()) {
      throw BudgetExhausted("scheduled class exceeds the budget at L=" + std::to_string(L));
    }
    out.sizes.push_back(L);
    out.dimensions.push_back(BigInt(cls.size()));
  }
  out.fit = detect_degree(out.sizes, out.dimensions);
  return out;
}

}  // namespace pauliclass
