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
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pauliclass/errors.hpp"
#include "pauliclass/pauli.hpp"

namespace pauliclass {

struct HamiltonianTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// H = sum_n h_n H_n with real h_n and distinct non-identity strings H_n.
class Hamiltonian {
 public:
  Hamiltonian() = default;
  explicit Hamiltonian(std::size_t num_sites) : num_sites_(num_sites) {
    if (num_sites == 0 || num_sites > PauliString::kMaxSites) {
      throw DimensionError("Hamiltonian on " + std::to_string(num_sites) + " sites");
    }
  }

  /// Appends a term. Zero coefficients are dropped.
  void add(double coefficient, const PauliString& string) {
    if (!std::isfinite(coefficient)) {
      throw ModelError("non-finite coefficient on " + format_pauli(string));
    }
    if (string.num_sites() != num_sites_) {
      throw DimensionError("term on " + std::to_string(string.num_sites()) +
                           " sites added to a " + std::to_string(num_sites_) +
                           "-site Hamiltonian");
    }
    if (string.is_identity()) throw ModelError("identity string is not a Hamiltonian string");
    if (coefficient == 0.0) return;
    if (!seen_.insert(string).second) {
      throw ModelError("duplicate Hamiltonian string " + format_pauli(string));
    }
    terms_.push_back({coefficient, string});
  }

  std::size_t num_sites() const { return num_sites_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }

  /// sum_n |h_n|
  double l1_norm() const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.coefficient);
    return s;
  }

  /// Same strings, new coefficients drawn by `draw()`.
  template <class Draw>
  Hamiltonian with_coefficients(Draw&& draw) const {
    Hamiltonian h(num_sites_);
    for (const auto& t : terms_) {
      double c = 0.0;
      while (c == 0.0) c = draw();
      h.add(c, t.string);
    }
    return h;
  }

 private:
  std::size_t num_sites_ = 0;
  std::vector<HamiltonianTerm> terms_;
  std::unordered_set<PauliString> seen_;
};

enum class Boundary { kOpen, kPeriodic };

/// Sampler for disordered couplings: uniform on [lo, hi] with a fixed seed.
struct RandomCouplings {
  double lo = 0.5;
  double hi = 1.5;
  std::uint64_t seed = 1;
};

namespace detail {

class CouplingSampler {
 public:
  explicit CouplingSampler(const RandomCouplings& spec)
      : engine_(spec.seed), dist_(spec.lo, spec.hi) {
    if (!(spec.lo < spec.hi)) throw ModelError("random coupling interval must have lo < hi");
  }
  double operator()() {
    double v = 0.0;
    while (v == 0.0) v = dist_(engine_);
    return v;
  }
  std::vector<double> draw(std::size_t n) {
    std::vector<double> out(n);
    for (auto& v : out) v = (*this)();
    return out;
  }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> dist_;
};

inline PauliString two_site(std::size_t n, std::size_t i, char a, std::size_t j, char b) {
  PauliString p(n);
  p.set(i, a);
  p.set(j, b);
  return p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// XY chain

/// Bond couplings J^{xx}, J^{yy}, J^{xy}, J^{yx} on bonds (i, i+1) and
/// transverse fields h^z on sites. Periodic chains carry an extra bond (L, 1).
struct XYCouplings {
  std::size_t num_sites = 0;
  Boundary boundary = Boundary::kOpen;
  std::vector<double> jxx, jyy, jxy, jyx;
  std::vector<double> hz;

  std::size_t num_bonds() const {
    return boundary == Boundary::kPeriodic ? num_sites : (num_sites == 0 ? 0 : num_sites - 1);
  }

  static XYCouplings uniform(std::size_t L, double j, double h, Boundary b = Boundary::kOpen) {
    XYCouplings c{L, b, {}, {}, {}, {}, {}};
    const std::size_t nb = c.num_bonds();
    c.jxx.assign(nb, j);
    c.jyy.assign(nb, j);
    c.jxy.assign(nb, j);
    c.jyx.assign(nb, j);
    c.hz.assign(L, h);
    return c;
  }

  static XYCouplings random(std::size_t L, const RandomCouplings& spec,
                            Boundary b = Boundary::kOpen) {
    XYCouplings c{L, b, {}, {}, {}, {}, {}};
    detail::CouplingSampler s(spec);
    const std::size_t nb = c.num_bonds();
    c.jxx = s.draw(nb);
    c.jyy = s.draw(nb);
    c.jxy = s.draw(nb);
    c.jyx = s.draw(nb);
    c.hz = s.draw(L);
    return c;
  }
};

inline Hamiltonian build_xy(const XYCouplings& c) {
  const std::size_t L = c.num_sites;
  if (L == 0) throw ModelError("XY chain needs at least one site");
  if (c.boundary == Boundary::kPeriodic && L < 3) {
    throw ModelError("periodic XY chain needs at least 3 sites");
  }
  const std::size_t nb = c.num_bonds();
  for (const auto* v : {&c.jxx, &c.jyy, &c.jxy, &c.jyx}) {
    if (v->size() != nb) {
      throw ModelError("XY bond coupling array has length " + std::to_string(v->size()) +
                       ", expected " + std::to_string(nb));
    }
  }
  if (c.hz.size() != L) {
    throw ModelError("XY field array has length " + std::to_string(c.hz.size()) +
                     ", expected " + std::to_string(L));
  }
  Hamiltonian h(L);
  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t i = b;
    const std::size_t j = (b + 1) % L;
    h.add(c.jxx[b], detail::two_site(L, i, 'X', j, 'X'));
    h.add(c.jyy[b], detail::two_site(L, i, 'Y', j, 'Y'));
    h.add(c.jxy[b], detail::two_site(L, i, 'X', j, 'Y'));
    h.add(c.jyx[b], detail::two_site(L, i, 'Y', j, 'X'));
  }
  for (std::size_t i = 0; i < L; ++i) h.add(c.hz[i], PauliString::single(L, i, 'Z'));
  return h;
}

// ---------------------------------------------------------------------------
// Kitaev graphs

enum class EdgeColor { kX, kY, kZ };

inline char color_symbol(EdgeColor c) {
  switch (c) {
    case EdgeColor::kX: return 'X';
    case EdgeColor::kY: return 'Y';
    case EdgeColor::kZ: return 'Z';
  }
  return '?';
}

inline EdgeColor parse_color(std::string_view s) {
  if (s == "x" || s == "X") return EdgeColor::kX;
  if (s == "y" || s == "Y") return EdgeColor::kY;
  if (s == "z" || s == "Z") return EdgeColor::kZ;
  throw ParseError("edge color must be x, y or z, got '" + std::string(s) + "'");
}

/// Vertices are 0-based.
struct GraphEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  EdgeColor color = EdgeColor::kX;
  double coupling = 1.0;
};

/// Interaction graph of a Kitaev model: degree at most 3 and a proper
/// 3-edge coloring, one interaction type per color.
class InteractionGraph {
 public:
  InteractionGraph() = default;
  explicit InteractionGraph(std::size_t num_vertices) : num_vertices_(num_vertices) {}

  InteractionGraph(std::size_t num_vertices, std::vector<GraphEdge> edges)
      : num_vertices_(num_vertices), edges_(std::move(edges)) {
    validate();
  }

  /// Open chain 0-1-...-(L-1), bond b colored by `pattern[b % pattern.size()]`.
  static InteractionGraph chain(std::size_t L, const std::vector<double>& couplings,
                                std::vector<EdgeColor> pattern = {EdgeColor::kX, EdgeColor::kY,
                                                                  EdgeColor::kZ}) {
    if (L < 1) throw ModelError("Kitaev chain needs at least one vertex");
    if (couplings.size() != L - 1) {
      throw ModelError("Kitaev chain coupling array has length " +
                       std::to_string(couplings.size()) + ", expected " + std::to_string(L - 1));
    }
    if (pattern.empty()) throw ModelError("empty color pattern");
    std::vector<GraphEdge> e;
    for (std::size_t b = 0; b + 1 < L; ++b) {
      e.push_back({b, b + 1, pattern[b % pattern.size()], couplings[b]});
    }
    return InteractionGraph(L, std::move(e));
  }

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += (e.i == v) + (e.j == v);
    return d;
  }

  /// First Betti number: |E| - |V| + #components.
  std::size_t cycle_rank() const {
    std::vector<std::size_t> parent(num_vertices_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    std::size_t components = num_vertices_;
    for (const auto& e : edges_) {
      const auto a = find(e.i), b = find(e.j);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return edges_.size() + components - num_vertices_;
  }

  void validate() const {
    std::vector<std::array<int, 3>> colors(num_vertices_, {0, 0, 0});
    std::vector<std::size_t> deg(num_vertices_, 0);
    std::unordered_set<std::uint64_t> pairs;
    for (const auto& e : edges_) {
      if (e.i >= num_vertices_ || e.j >= num_vertices_) {
        throw ModelError("edge (" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) +
                         ") out of range 1.." + std::to_string(num_vertices_));
      }
      if (e.i == e.j) throw ModelError("self-loop at vertex " + std::to_string(e.i + 1));
      if (e.coupling == 0.0 || !std::isfinite(e.coupling)) {
        throw ModelError("edge (" + std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) +
                         ") needs a finite nonzero coupling");
      }
      const auto lo = std::min(e.i, e.j), hi = std::max(e.i, e.j);
      if (!pairs.insert((static_cast<std::uint64_t>(lo) << 32) | hi).second) {
        throw ModelError("multi-edge between vertices " + std::to_string(lo + 1) + " and " +
                         std::to_string(hi + 1));
      }
      for (auto v : {e.i, e.j}) {
        if (++deg[v] > 3) throw ModelError("vertex " + std::to_string(v + 1) + " has degree > 3");
        if (++colors[v][static_cast<int>(e.color)] > 1) {
          throw ModelError("improper coloring at vertex " + std::to_string(v + 1));
        }
      }
    }
  }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<GraphEdge> edges_;
};

inline Hamiltonian build_kitaev(const InteractionGraph& g) {
  g.validate();
  Hamiltonian h(g.num_vertices());
  for (const auto& e : g.edges()) {
    const char s = color_symbol(e.color);
    h.add(e.coupling, detail::two_site(g.num_vertices(), e.i, s, e.j, s));
  }
  return h;
}

struct LoopedGraph {
  InteractionGraph graph;
  std::size_t added_loops = 0;  // independent cycles added
};

inline LoopedGraph add_loops(const InteractionGraph& g, const std::vector<GraphEdge>& extra) {
  auto edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  InteractionGraph out(g.num_vertices(), std::move(edges));
  return {out, out.cycle_rank() - g.cycle_rank()};
}

// ---------------------------------------------------------------------------
// XY-ZZ chain

/// XX+YY on odd bonds (1,2), (3,4), ... and ZZ on even bonds (2,3), (4,5), ...
/// of an n-qubit chain; bonds that would leave the chain are dropped.
struct XYZZCouplings {
  std::size_t num_sites = 0;
  std::vector<double> jx, jy;  // one per odd bond
  std::vector<double> jz;      // one per even bond

  static std::size_t odd_bonds(std::size_t n) { return n / 2; }
  static std::size_t even_bonds(std::size_t n) { return n == 0 ? 0 : (n - 1) / 2; }

  static XYZZCouplings uniform(std::size_t n, double j) {
    return {n, std::vector<double>(odd_bonds(n), j), std::vector<double>(odd_bonds(n), j),
            std::vector<double>(even_bonds(n), j)};
  }

  static XYZZCouplings random(std::size_t n, const RandomCouplings& spec) {
    detail::CouplingSampler s(spec);
    XYZZCouplings c{n, {}, {}, {}};
    c.jx = s.draw(odd_bonds(n));
    c.jy = s.draw(odd_bonds(n));
    c.jz = s.draw(even_bonds(n));
    return c;
  }
};

inline Hamiltonian build_xyzz(const XYZZCouplings& c) {
  const std::size_t n = c.num_sites;
  if (n < 2) throw ModelError("XY-ZZ chain needs at least 2 sites");
  if (c.jx.size() != XYZZCouplings::odd_bonds(n) || c.jy.size() != XYZZCouplings::odd_bonds(n)) {
    throw ModelError("XY-ZZ needs " + std::to_string(XYZZCouplings::odd_bonds(n)) +
                     " XY-bond couplings");
  }
  if (c.jz.size() != XYZZCouplings::even_bonds(n)) {
    throw ModelError("XY-ZZ needs " + std::to_string(XYZZCouplings::even_bonds(n)) +
                     " ZZ-bond couplings");
  }
  Hamiltonian h(n);
  // 0-based: odd bond k joins (2k, 2k+1), even bond k joins (2k+1, 2k+2).
  for (std::size_t k = 0; k < XYZZCouplings::odd_bonds(n); ++k) {
    h.add(c.jx[k], detail::two_site(n, 2 * k, 'X', 2 * k + 1, 'X'));
    h.add(c.jy[k], detail::two_site(n, 2 * k, 'Y', 2 * k + 1, 'Y'));
  }
  for (std::size_t k = 0; k < XYZZCouplings::even_bonds(n); ++k) {
    h.add(c.jz[k], detail::two_site(n, 2 * k + 1, 'Z', 2 * k + 2, 'Z'));
  }
  return h;
}

}  // namespace pauliclass
