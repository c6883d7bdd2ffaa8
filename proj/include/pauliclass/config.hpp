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

// JSON/CSV readers for model configs and gate schedules, plus result writers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pauliclass/dim_poly.hpp"
#include "pauliclass/errors.hpp"
#include "pauliclass/gates.hpp"
#include "pauliclass/hamiltonian.hpp"

namespace pauliclass::config {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("key '") + key + "' has the wrong type");
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

inline std::vector<double> array_or_zeros(const Json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) return std::vector<double>(n, 0.0);
  auto v = get<std::vector<double>>(j, key);
  if (v.size() != n) {
    throw ModelError(std::string("coupling array '") + key + "' has length " +
                     std::to_string(v.size()) + ", expected " + std::to_string(n));
  }
  return v;
}

inline std::size_t index_1based(const Json& v, std::size_t n) {
  if (!v.is_number_integer()) throw ParseError("site indices must be integers");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > n) {
    throw DimensionError("site " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<std::size_t>(i - 1);
}

inline RandomCouplings random_spec(const Json& r) {
  return {get_or<double>(r, "lo", 0.5), get_or<double>(r, "hi", 1.5),
          get_or<std::uint64_t>(r, "seed", 1)};
}

inline GraphEdge edge_from_json(const Json& e, std::size_t n) {
  if (!e.is_array() || e.size() < 3 || e.size() > 4) {
    throw ParseError("graph edges are [i, j, \"x|y|z\", J]");
  }
  if (!e[2].is_string()) throw ParseError("edge color must be a string");
  const double J = e.size() == 4 ? e[3].get<double>() : 1.0;
  return {index_1based(e[0], n), index_1based(e[1], n), parse_color(e[2].get<std::string>()), J};
}

inline std::vector<EdgeColor> parse_pattern(const std::string& s) {
  std::vector<EdgeColor> out;
  for (char c : s) out.push_back(parse_color(std::string(1, c)));
  return out;
}

}  // namespace detail

/// Edge list as CSV lines `i,j,color,J` with 1-based vertices; a header line
/// and blank or '#' lines are skipped.
inline std::vector<GraphEdge> parse_edges_csv(const std::string& text, std::size_t n) {
  std::vector<GraphEdge> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line.erase(std::remove(line.begin(), line.end(), '\r'), line.end());
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(" \t"));
      cell.erase(cell.find_last_not_of(" \t") + 1);
      f.push_back(cell);
    }
    if (f.size() < 3 || f.size() > 4) {
      throw ParseError("edge CSV line " + std::to_string(lineno) + ": expected i,j,color[,J]");
    }
    if (lineno == 1 && !f[0].empty() && !std::isdigit(static_cast<unsigned char>(f[0][0]))) continue;
    try {
      Json e = Json::array({std::stoll(f[0]), std::stoll(f[1]), f[2]});
      if (f.size() == 4) e.push_back(std::stod(f[3]));
      out.push_back(detail::edge_from_json(e, n));
    } catch (const std::logic_error&) {
      throw ParseError("edge CSV line " + std::to_string(lineno) + ": bad number");
    }
  }
  return out;
}

/// Model family plus the Hamiltonian built from a config object.
struct Model {
  std::string family;
  Hamiltonian hamiltonian{1};
  std::size_t added_loops = 0;
};

/// {"model": "xy"|"kitaev"|"xyzz", "L": n, "boundary": "open"|"periodic",
///  "uniform": J | {"J": J, "hz": h}, "random": {"lo", "hi", "seed"},
///  "couplings": {...}, "graph": {"edges": [[i, j, "x", J], ...]},
///  "edges_csv": path, "pattern": "xyz", "loops": [[i, j, "z", J], ...]}
inline Model build_model(const Json& j) {
  if (!j.is_object()) throw ParseError("model config must be a JSON object");
  const auto family = detail::get<std::string>(j, "model");
  const char* size_key = j.contains("L") ? "L" : "n";
  const auto n = detail::get<long long>(j, size_key);
  if (n < 1 || n > static_cast<long long>(PauliString::kMaxSites)) {
    throw DimensionError("system size " + std::to_string(n) + " out of range 1.." +
                         std::to_string(PauliString::kMaxSites));
  }
  const auto L = static_cast<std::size_t>(n);
  const int sources = j.contains("uniform") + j.contains("random") + j.contains("couplings");
  if (sources > 1) throw ParseError("give at most one of uniform, random, couplings");

  double uj = 1.0, uh = 1.0;
  if (j.contains("uniform")) {
    const auto& u = j.at("uniform");
    if (u.is_number()) {
      uj = uh = u.get<double>();
    } else if (u.is_object()) {
      uj = detail::get_or<double>(u, "J", 1.0);
      uh = detail::get_or<double>(u, "hz", uj);
    } else {
      throw ParseError("uniform must be a number or {\"J\", \"hz\"}");
    }
  }

  Model m;
  m.family = family;
  if (family == "xy") {
    const auto b = detail::get_or<std::string>(j, "boundary", "open");
    if (b != "open" && b != "periodic") throw ParseError("boundary must be open or periodic");
    const Boundary bc = b == "open" ? Boundary::kOpen : Boundary::kPeriodic;
    XYCouplings c;
    if (j.contains("random")) {
      c = XYCouplings::random(L, detail::random_spec(j.at("random")), bc);
    } else if (j.contains("couplings")) {
      const auto& cj = j.at("couplings");
      c.num_sites = L;
      c.boundary = bc;
      const auto nb = c.num_bonds();
      c.jxx = detail::array_or_zeros(cj, "jxx", nb);
      c.jyy = detail::array_or_zeros(cj, "jyy", nb);
      c.jxy = detail::array_or_zeros(cj, "jxy", nb);
      c.jyx = detail::array_or_zeros(cj, "jyx", nb);
      c.hz = detail::array_or_zeros(cj, "hz", L);
    } else {
      c = XYCouplings::uniform(L, uj, uh, bc);
    }
    m.hamiltonian = build_xy(c);
  } else if (family == "kitaev") {
    InteractionGraph g;
    if (j.contains("graph") || j.contains("edges_csv")) {
      std::vector<GraphEdge> edges;
      if (j.contains("graph")) {
        const auto& ge = j.at("graph");
        if (!ge.contains("edges") || !ge.at("edges").is_array()) {
          throw ParseError("graph needs an edges array");
        }
        for (const auto& e : ge.at("edges")) edges.push_back(detail::edge_from_json(e, L));
      } else {
        edges = parse_edges_csv(read_text_file(detail::get<std::string>(j, "edges_csv")), L);
      }
      g = InteractionGraph(L, std::move(edges));
    } else {
      const auto pattern = detail::parse_pattern(detail::get_or<std::string>(j, "pattern", "xyz"));
      std::vector<double> cpl;
      if (j.contains("random")) {
        pauliclass::detail::CouplingSampler s(detail::random_spec(j.at("random")));
        cpl = s.draw(L - 1);
      } else if (j.contains("couplings")) {
        cpl = detail::get<std::vector<double>>(j, "couplings");
      } else {
        cpl.assign(L - 1, uj);
      }
      g = InteractionGraph::chain(L, cpl, pattern);
    }
    if (j.contains("loops")) {
      std::vector<GraphEdge> extra;
      for (const auto& e : j.at("loops")) extra.push_back(detail::edge_from_json(e, L));
      auto looped = add_loops(g, extra);
      m.added_loops = looped.added_loops;
      g = std::move(looped.graph);
    }
    m.hamiltonian = build_kitaev(g);
  } else if (family == "xyzz") {
    XYZZCouplings c;
    if (j.contains("random")) {
      c = XYZZCouplings::random(L, detail::random_spec(j.at("random")));
    } else if (j.contains("couplings")) {
      const auto& cj = j.at("couplings");
      c.num_sites = L;
      c.jx = detail::array_or_zeros(cj, "jx", XYZZCouplings::odd_bonds(L));
      c.jy = detail::array_or_zeros(cj, "jy", XYZZCouplings::odd_bonds(L));
      c.jz = detail::array_or_zeros(cj, "jz", XYZZCouplings::even_bonds(L));
    } else {
      c = XYZZCouplings::uniform(L, uj);
    }
    m.hamiltonian = build_xyzz(c);
  } else {
    throw ParseError("unknown model '" + family + "' (expected xy, kitaev or xyzz)");
  }
  return m;
}

/// [{"t": 1.0, "gate": "swap", "sites": [2, 3]}, {"t": 2.0, "gate": "axisw",
///   "site": 1, "alpha": 0.39}]; sites are 1-based. Sorted by time (stable).
inline std::vector<TimedGate> parse_schedule(const Json& j, std::size_t L) {
  if (!j.is_array()) throw ParseError("gate schedule must be a JSON array");
  std::vector<TimedGate> out;
  for (const auto& e : j) {
    if (!e.is_object()) throw ParseError("schedule entries must be objects");
    const double t = detail::get<double>(e, "t");
    if (!std::isfinite(t) || t < 0) throw ParseError("gate time must be finite and >= 0");
    auto kind = detail::get<std::string>(e, "gate");
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
    QuenchGate g;
    if (kind == "swap") {
      if (!e.contains("sites") || !e.at("sites").is_array() || e.at("sites").size() != 2) {
        throw ParseError("swap needs \"sites\": [i, j]");
      }
      g = QuenchGate::swap(detail::index_1based(e.at("sites")[0], L),
                           detail::index_1based(e.at("sites")[1], L));
    } else {
      if (!e.contains("site")) throw ParseError("gate '" + kind + "' needs \"site\"");
      const auto s = detail::index_1based(e.at("site"), L);
      if (kind == "x" || kind == "y" || kind == "z") {
        g = QuenchGate::pauli(kind[0], s);
      } else if (kind == "s") {
        g = QuenchGate::phase_s(s);
      } else if (kind == "axisw") {
        g = QuenchGate::axis_w(s, detail::get<double>(e, "alpha"));
      } else {
        throw ParseError("unknown gate '" + kind + "'");
      }
    }
    g.validate(L);
    out.push_back({t, g});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TimedGate& a, const TimedGate& b) { return a.time < b.time; });
  return out;
}

inline Json fit_to_json(const PolynomialFit& f) {
  return Json{{"degree", f.poly.effective_degree()},
              {"coeffs", f.poly.coeff_strings()},
              {"fitted_at", f.fitted_at},
              {"validated_at", f.validated_at}};
}

/// Columns of a simple numeric CSV; the first line is a header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ParseError("CSV has no column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
  }
};

inline Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    line.erase(std::remove(line.begin(), line.end(), '\r'), line.end());
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (first) {
      t.header = std::move(f);
      first = false;
    } else {
      if (f.size() != t.header.size()) throw ParseError("ragged CSV row: " + line);
      t.rows.push_back(std::move(f));
    }
  }
  if (first) throw ParseError("empty CSV");
  return t;
}

struct ExponentialFit {
  double rate = 0.0;
  double prefactor = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares of ln(y) against x: y ~ prefactor * exp(rate * x).
inline ExponentialFit fit_exponential(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("x and y differ in length");
  if (x.size() < 4) throw Error("exponential fit needs at least 4 points");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  std::vector<double> ly(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0) || !std::isfinite(y[i])) throw Error("exponential fit needs positive values");
    ly[i] = std::log(y[i]);
    sx += x[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0) throw Error("exponential fit needs at least two distinct x values");
  ExponentialFit f;
  f.rate = sxy / sxx;
  f.prefactor = std::exp(my - f.rate * mx);
  f.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  f.points = x.size();
  return f;
}

}  // namespace pauliclass::config
