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

// Command-line front end: class dumps, OED scans, fits, and time evolution.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pauliclass/closure.hpp"
#include "pauliclass/config.hpp"
#include "pauliclass/dim_poly.hpp"
#include "pauliclass/dynamics.hpp"
#include "pauliclass/ed_oracle.hpp"
#include "pauliclass/quench.hpp"

namespace {

using namespace pauliclass;
using config::Json;

enum ExitCode { kOk = 0, kFailure = 1, kConfigError = 2, kBudgetExhausted = 3, kConsistency = 4 };

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  double budget = static_cast<double>(kDefaultBudget);
  unsigned threads = 1;
  bool no_meta = false;

  std::string model;
  std::optional<int> size;
  std::string boundary;
  std::optional<double> coupling;
  std::optional<double> field;
  std::optional<std::uint64_t> random_seed;
  double random_lo = 0.5, random_hi = 1.5;
  std::string pattern;
};

std::size_t budget_of(const Options& o) {
  if (!(o.budget >= 1) || o.budget > 4e9) throw ParseError("--budget must be in [1, 4e9]");
  return static_cast<std::size_t>(o.budget);
}

Json model_json(const Options& o) {
  Json j = o.config_path.empty() ? Json::object() : config::load_json_file(o.config_path);
  if (!o.model.empty()) j["model"] = o.model;
  if (o.size) {
    j.erase("n");
    j["L"] = *o.size;
  }
  if (!o.boundary.empty()) j["boundary"] = o.boundary;
  if (!o.pattern.empty()) j["pattern"] = o.pattern;
  if (o.random_seed) {
    j.erase("uniform");
    j.erase("couplings");
    j["random"] = {{"lo", o.random_lo}, {"hi", o.random_hi}, {"seed", *o.random_seed}};
  } else if (o.coupling || o.field) {
    j.erase("random");
    j.erase("couplings");
    const double J = o.coupling.value_or(1.0);
    j["uniform"] = {{"J", J}, {"hz", o.field.value_or(J)}};
  }
  if (!j.contains("model")) throw ParseError("no model given (use --model or --config)");
  return j;
}

config::Model load_model(const Options& o, std::optional<int> size = std::nullopt) {
  Json j = model_json(o);
  if (size) {
    j.erase("n");
    j["L"] = *size;
  }
  return config::build_model(j);
}

class Output {
 public:
  explicit Output(const Options& o) : opt_(o) {
    if (!o.out_path.empty()) {
      file_.open(o.out_path);
      if (!file_) throw ParseError("cannot write " + o.out_path);
    }
    if (o.format != "csv" && o.format != "json") throw ParseError("--format must be csv or json");
  }

  std::ostream& os() { return opt_.out_path.empty() ? std::cout : file_; }
  bool json() const { return opt_.format == "json"; }

  void meta() {
    if (json()) return;
    os() << "# schema=1\n";
    if (!opt_.no_meta) os() << "# generated=" << timestamp() << "\n";
  }

  void emit(Json j) {
    j["schema"] = 1;
    if (!opt_.no_meta) j["generated"] = timestamp();
    os() << j.dump(2) << "\n";
  }

 private:
  static std::string timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  const Options& opt_;
  std::ofstream file_;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      const auto colon = part.find(':');
      if (colon == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        const int a = std::stoi(part.substr(0, colon)), b = std::stoi(part.substr(colon + 1));
        if (b < a) throw ParseError(std::string("empty range in ") + what);
        for (int v = a; v <= b; ++v) out.push_back(v);
      }
    }
  } catch (const std::logic_error&) {
    throw ParseError(std::string("cannot parse ") + what + " '" + text + "'");
  }
  if (out.empty()) throw ParseError(std::string("empty ") + what);
  return out;
}

Integrator parse_integrator(const std::string& s) {
  if (s == "auto") return Integrator::kAuto;
  if (s == "rk4") return Integrator::kRungeKutta4;
  if (s == "dense") return Integrator::kDense;
  if (s == "krylov") return Integrator::kKrylov;
  throw ParseError("unknown integrator '" + s + "'");
}

// class ---------------------------------------------------------------------

struct ClassArgs {
  std::string seed;
  bool partition = false;
  bool count_only = false;
  std::size_t max_sites = kDefaultPartitionCap;
};

int run_class(const Options& o, const ClassArgs& a) {
  const auto model = load_model(o);
  const auto& h = model.hamiltonian;
  const std::size_t L = h.num_sites();
  Output out(o);
  if (a.partition) {
    const auto part = partition_all(h, a.max_sites);
    if (out.json()) {
      Json classes = Json::array();
      for (const auto& c : part.classes) {
        Json cj{{"size", c.size()}, {"first", to_word(c.member(0))}};
        if (!a.count_only) {
          Json m = Json::array();
          for (std::size_t i = 0; i < c.size(); ++i) m.push_back(to_word(c.member(i)));
          cj["members"] = std::move(m);
        }
        classes.push_back(std::move(cj));
      }
      out.emit({{"L", L}, {"K", part.num_classes()}, {"classes", std::move(classes)}});
    } else {
      out.meta();
      out.os() << "# L=" << L << " K=" << part.num_classes() << "\n";
      out.os() << "class,size,first\n";
      for (std::size_t k = 0; k < part.classes.size(); ++k) {
        out.os() << k + 1 << "," << part.classes[k].size() << "," << to_word(part.classes[k].member(0))
                 << "\n";
      }
    }
    return kOk;
  }
  if (a.seed.empty()) throw ParseError("class needs --seed or --partition");
  const auto seed = parse_pauli(a.seed, L);
  const auto cls = generate_class(h, seed, budget_of(o));
  if (out.json()) {
    Json j{{"L", L}, {"seed", to_word(seed)}, {"complete", cls.complete()}, {"depth", cls.depth()}};
    j[cls.complete() ? "oed" : "lower_bound"] = cls.size();
    if (!a.count_only) {
      Json m = Json::array();
      for (std::size_t i = 0; i < cls.size(); ++i) m.push_back(to_word(cls.member(i)));
      j["members"] = std::move(m);
    }
    out.emit(std::move(j));
  } else {
    out.meta();
    out.os() << "L=" << L << " seed=" << to_word(seed) << " oed=" << cls.size()
             << " complete=" << (cls.complete() ? "true" : "false") << "\n";
    if (!a.count_only) {
      for (std::size_t i = 0; i < cls.size(); ++i) out.os() << to_word(cls.member(i)) << "\n";
    }
  }
  return cls.complete() ? kOk : kBudgetExhausted;
}

// scan ----------------------------------------------------------------------

struct ScanArgs {
  std::string sizes;
  std::string family = "site";
  std::string axes = "XYZ";
  std::string sites = "all";
  std::string seed;
  bool site_sums = false;
};

struct ScanJob {
  int L = 0;
  std::size_t site = 0;
  std::vector<PauliString> seeds;
  std::string label;
  std::size_t oed = 0;
  bool complete = true;
};

int run_scan(const Options& o, const ScanArgs& a) {
  std::string size_text = a.sizes;
  if (size_text.empty()) {
    const Json j = model_json(o);
    const char* key = j.contains("L") ? "L" : "n";
    if (!j.contains(key) || !j.at(key).is_number_integer()) throw ParseError("scan needs --sizes or L");
    size_text = std::to_string(j.at(key).get<int>());
  }
  const auto sizes = parse_int_list(size_text, "--sizes");
  const std::size_t budget = budget_of(o);
  for (char c : a.axes) {
    if (c != 'X' && c != 'Y' && c != 'Z') throw ParseError("--axes takes letters from XYZ");
  }
  std::vector<config::Model> models;
  std::vector<ScanJob> jobs;
  for (int L : sizes) {
    if (L < 1) throw DimensionError("system sizes must be positive");
    models.push_back(load_model(o, L));
    const auto n = static_cast<std::size_t>(L);
    if (a.family == "site") {
      std::vector<int> sites;
      if (a.sites == "all") {
        for (int i = 1; i <= L; ++i) sites.push_back(i);
      } else {
        sites = parse_int_list(a.sites, "--sites");
      }
      for (int s : sites) {
        if (s < 1 || s > L) continue;
        ScanJob j{L, static_cast<std::size_t>(s), {}, {}, 0, true};
        for (char c : a.axes) j.seeds.push_back(PauliString::single(n, j.site - 1, c));
        jobs.push_back(std::move(j));
      }
    } else if (a.family == "fixed") {
      if (a.seed.empty()) throw ParseError("--family fixed needs --seed");
      jobs.push_back({L, 0, {parse_pauli(a.seed, n)}, {}, 0, true});
    } else if (a.family == "parity") {
      PauliString p(n);
      for (std::size_t s = 0; s < n; ++s) p.set(s, 'Z');
      jobs.push_back({L, 0, {p}, {}, 0, true});
    } else {
      throw ParseError("--family must be site, fixed or parity");
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        auto& j = jobs[k];
        const auto& h = models[static_cast<std::size_t>(
            std::find(sizes.begin(), sizes.end(), j.L) - sizes.begin())].hamiltonian;
        for (const auto& s : j.seeds) {
          const auto r = oed(h, s, budget);
          j.oed += r.count;
          j.complete = j.complete && r.complete;
        }
      } catch (...) {
        std::lock_guard lock(fail_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned nt = std::max(1u, std::min<unsigned>(o.threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  bool all_complete = true;
  Output out(o);
  Json rows = Json::array();
  if (!out.json()) {
    out.meta();
    out.os() << (a.site_sums ? "L,site,oed_sum,complete\n" : "L,seed,oed,complete\n");
  }
  for (const auto& j : jobs) {
    all_complete = all_complete && j.complete;
    if (a.site_sums || j.seeds.size() == 1) {
      const std::string key = a.site_sums ? std::to_string(j.site) : to_word(j.seeds[0]);
      if (out.json()) {
        rows.push_back({{"L", j.L}, {a.site_sums ? "site" : "seed", key}, {"oed", j.oed}, {"complete", j.complete}});
      } else {
        out.os() << j.L << "," << key << "," << j.oed << "," << (j.complete ? "true" : "false") << "\n";
      }
    } else {
      // Per-seed rows: recompute individually (cheap relative to the sum).
      const auto& h = models[static_cast<std::size_t>(
          std::find(sizes.begin(), sizes.end(), j.L) - sizes.begin())].hamiltonian;
      for (const auto& s : j.seeds) {
        const auto r = oed(h, s, budget);
        if (out.json()) {
          rows.push_back({{"L", j.L}, {"seed", to_word(s)}, {"oed", r.count}, {"complete", r.complete}});
        } else {
          out.os() << j.L << "," << to_word(s) << "," << r.count << "," << (r.complete ? "true" : "false")
                   << "\n";
        }
      }
    }
  }
  if (out.json()) out.emit({{"rows", std::move(rows)}});
  return all_complete ? kOk : kBudgetExhausted;
}

// fits ----------------------------------------------------------------------

struct FitArgs {
  std::string in;
  std::string x = "L";
  std::string y = "oed";
  int degree = -1;
  std::optional<double> min_x, max_x;
};

std::pair<std::vector<std::string>, std::vector<std::string>> read_columns(const FitArgs& a) {
  const auto t = config::parse_csv(config::read_text_file(a.in));
  const auto cx = t.column(a.x), cy = t.column(a.y);
  std::vector<std::string> xs, ys;
  for (const auto& r : t.rows) {
    xs.push_back(r[cx]);
    ys.push_back(r[cy]);
  }
  return {xs, ys};
}

int run_fit_poly(const Options& o, const FitArgs& a) {
  const auto [xs, ys] = read_columns(a);
  std::vector<std::int64_t> sizes;
  std::vector<BigInt> values;
  try {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sizes.push_back(std::stoll(xs[i]));
      values.emplace_back(ys[i]);
    }
  } catch (const std::exception&) {
    throw ParseError("fit-poly needs integer columns");
  }
  const auto fit = a.degree < 0 ? detect_degree(sizes, values)
                                : fit_values(sizes, values, static_cast<std::size_t>(a.degree));
  Output out(o);
  if (out.json()) {
    out.emit(config::fit_to_json(fit));
  } else {
    out.meta();
    out.os() << "# degree=" << fit.poly.effective_degree() << " validated_at=";
    for (std::size_t i = 0; i < fit.validated_at.size(); ++i) {
      out.os() << (i ? ";" : "") << fit.validated_at[i];
    }
    out.os() << "\npower,coefficient\n";
    const auto c = fit.poly.coeff_strings();
    for (std::size_t k = 0; k < c.size(); ++k) out.os() << k << "," << c[k] << "\n";
  }
  return kOk;
}

int run_fit_exp(const Options& o, const FitArgs& a) {
  const auto [xs, ys] = read_columns(a);
  std::vector<double> x, y;
  try {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double xv = std::stod(xs[i]);
      if ((a.min_x && xv < *a.min_x) || (a.max_x && xv > *a.max_x)) continue;
      x.push_back(xv);
      y.push_back(std::stod(ys[i]));
    }
  } catch (const std::logic_error&) {
    throw ParseError("fit-exp needs numeric columns");
  }
  const auto f = config::fit_exponential(x, y);
  Output out(o);
  if (out.json()) {
    out.emit({{"rate", f.rate}, {"prefactor", f.prefactor}, {"r_squared", f.r_squared}, {"points", f.points}});
  } else {
    out.meta();
    out.os() << "rate,prefactor,r_squared,points\n"
             << num(f.rate) << "," << num(f.prefactor) << "," << num(f.r_squared) << "," << f.points << "\n";
  }
  return kOk;
}

// dynamics ------------------------------------------------------------------

struct EvolveArgs {
  std::vector<int> sites;
  std::string observable;
  std::string state = "+";
  double t_max = 10.0;
  double dt = 0.05;
  std::string integrator = "auto";
  std::string schedule;
};

void write_series(Output& out, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  if (out.json()) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json obj;
      for (std::size_t c = 0; c < header.size(); ++c) obj[header[c]] = r[c];
      arr.push_back(std::move(obj));
    }
    out.emit({{"rows", std::move(arr)}});
    return;
  }
  out.meta();
  for (std::size_t c = 0; c < header.size(); ++c) out.os() << (c ? "," : "") << header[c];
  out.os() << "\n";
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out.os() << (c ? "," : "") << r[c];
    out.os() << "\n";
  }
}

int run_evolve(const Options& o, const EvolveArgs& a) {
  const auto model = load_model(o);
  const auto& h = model.hamiltonian;
  EvolveOptions eo;
  eo.integrator = parse_integrator(a.integrator);
  std::vector<RelaxationRequest> req;
  for (int s : a.sites) {
    if (s < 1 || static_cast<std::size_t>(s) > h.num_sites()) {
      throw DimensionError("--site " + std::to_string(s) + " out of range");
    }
    const auto init = InitialState::named(static_cast<std::size_t>(s - 1), a.state);
    const char axis = a.observable.empty() ? init.axis() : static_cast<char>(std::toupper(a.observable[0]));
    req.push_back({static_cast<std::size_t>(s - 1), axis, init});
  }
  const auto rows = run_relaxation_experiment(h, req, a.t_max, a.dt, budget_of(o), eo);
  std::vector<std::vector<std::string>> table;
  for (const auto& r : rows) {
    table.push_back({num(r.t), std::to_string(r.site + 1), r.observable, num(r.value), num(r.norm_drift)});
  }
  Output out(o);
  write_series(out, {"t", "site", "observable", "value", "norm_drift"}, table);
  return kOk;
}

int run_quench(const Options& o, const EvolveArgs& a) {
  const auto model = load_model(o);
  const auto& h = model.hamiltonian;
  const std::size_t L = h.num_sites();
  if (a.sites.size() != 1) throw ParseError("quench takes exactly one --site");
  const auto init = InitialState::named(static_cast<std::size_t>(a.sites[0] - 1), a.state);
  init.validate(L);
  const auto obs = a.observable.empty()
                       ? PauliString::single(L, init.site, init.axis())
                       : parse_pauli(a.observable, L);
  std::vector<TimedGate> sched;
  if (!a.schedule.empty()) sched = config::parse_schedule(config::load_json_file(a.schedule), L);
  EvolveOptions eo;
  eo.integrator = parse_integrator(a.integrator);
  const auto samples =
      quenched_evolution(h, sched, obs, init, time_grid(a.t_max, a.dt), budget_of(o), eo);
  std::vector<std::vector<std::string>> table;
  for (const auto& s : samples) {
    table.push_back({num(s.t), format_pauli(obs), num(s.value), num(s.norm_drift), std::to_string(s.basis_size)});
  }
  Output out(o);
  write_series(out, {"t", "observable", "value", "norm_drift", "basis_size"}, table);
  return kOk;
}

struct OracleArgs {
  EvolveArgs evolve;
  std::string projection_seed;
};

int run_oracle(const Options& o, const OracleArgs& a) {
  const auto model = load_model(o);
  const auto& h = model.hamiltonian;
  const std::size_t L = h.num_sites();
  Output out(o);
  if (!a.projection_seed.empty()) {
    const auto members = exact_class_projection(h, parse_pauli(a.projection_seed, L));
    std::vector<std::vector<std::string>> table;
    for (const auto& m : members) table.push_back({to_word(m)});
    write_series(out, {"member"}, table);
    return kOk;
  }
  const auto& e = a.evolve;
  if (e.sites.size() != 1) throw ParseError("oracle takes exactly one --site");
  const auto init = InitialState::named(static_cast<std::size_t>(e.sites[0] - 1), e.state);
  init.validate(L);
  const auto obs = e.observable.empty() ? PauliString::single(L, init.site, init.axis())
                                        : parse_pauli(e.observable, L);
  std::vector<TimedGate> sched;
  if (!e.schedule.empty()) sched = config::parse_schedule(config::load_json_file(e.schedule), L);
  const auto times = time_grid(e.t_max, e.dt);
  const auto v = exact_heisenberg(h, obs, times, init, sched);
  std::vector<std::vector<std::string>> table;
  for (std::size_t k = 0; k < times.size(); ++k) table.push_back({num(times[k]), format_pauli(obs), num(v[k])});
  write_series(out, {"t", "observable", "value"}, table);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-string equivalence classes and operator evolution dimensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "Model config (JSON)");
  app.add_option("--out", o.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", o.format, "Output format: csv or json");
  app.add_option("--budget", o.budget, "Maximum class size before giving up");
  app.add_option("--threads", o.threads, "Worker threads for scans");
  app.add_flag("--no-meta", o.no_meta, "Omit the timestamp line");
  app.add_option("--model", o.model, "xy, kitaev or xyzz");
  app.add_option("--L,--n", o.size, "Number of qubits");
  app.add_option("--boundary", o.boundary, "open or periodic (xy)");
  app.add_option("--J", o.coupling, "Uniform coupling");
  app.add_option("--hz", o.field, "Uniform transverse field (xy)");
  app.add_option("--random-seed", o.random_seed, "Draw couplings uniformly with this RNG seed");
  app.add_option("--random-lo", o.random_lo, "Lower bound of random couplings");
  app.add_option("--random-hi", o.random_hi, "Upper bound of random couplings");
  app.add_option("--pattern", o.pattern, "Kitaev chain color pattern, e.g. xyz");

  ClassArgs ca;
  auto* cls = app.add_subcommand("class", "Equivalence class of a seed string");
  cls->add_option("--seed", ca.seed, "Seed string, e.g. X1 or Z2Z3 or XIZ");
  cls->add_flag("--partition", ca.partition, "Partition all 4^L strings into classes");
  cls->add_flag("--count-only", ca.count_only, "Print only the summary");
  cls->add_option("--max-sites", ca.max_sites, "Size cap for --partition");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "OEDs across system sizes and seeds");
  scan->add_option("--sizes", sa.sizes, "Sizes, e.g. 4:10 or 4,6,8");
  scan->add_option("--family", sa.family, "site, fixed or parity");
  scan->add_option("--axes", sa.axes, "Single-site axes for the site family");
  scan->add_option("--sites", sa.sites, "1-based sites (all, 1:3, 2,5)");
  scan->add_option("--seed", sa.seed, "Seed for the fixed family");
  scan->add_flag("--site-sums", sa.site_sums, "Sum OEDs over the axes at each site");

  FitArgs fa;
  auto* fit_poly = app.add_subcommand("fit-poly", "Exact polynomial fit of integer counts");
  auto* fit_exp = app.add_subcommand("fit-exp", "Least-squares fit of ln(y) against x");
  for (auto* sub : {fit_poly, fit_exp}) {
    sub->add_option("--in", fa.in, "CSV input")->required();
    sub->add_option("--x", fa.x, "Column with system sizes");
    sub->add_option("--y", fa.y, "Column with counts");
  }
  fit_poly->add_option("--degree", fa.degree, "Degree; detected when omitted");
  fit_exp->add_option("--min-x", fa.min_x, "Ignore rows with smaller x");
  fit_exp->add_option("--max-x", fa.max_x, "Ignore rows with larger x");

  EvolveArgs ea;
  auto* evolve = app.add_subcommand("evolve", "Single-site relaxation inside the class");
  auto* quench = app.add_subcommand("quench", "Evolution interrupted by gates");
  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "Dense exact-diagonalisation reference");
  for (auto* sub : {evolve, quench}) {
    sub->add_option("--site", ea.sites, "1-based site of the polarized qubit")->required();
    sub->add_option("--observable", ea.observable, "Observable (axis for evolve, string for quench)");
    sub->add_option("--state", ea.state, "+, -, +i, -i, 0 or 1");
    sub->add_option("--tmax", ea.t_max, "Final time");
    sub->add_option("--dt", ea.dt, "Output spacing");
    sub->add_option("--integrator", ea.integrator, "auto, dense, krylov or rk4");
  }
  quench->add_option("--schedule", ea.schedule, "Gate schedule (JSON)");
  oracle->add_option("--site", oa.evolve.sites, "1-based site of the polarized qubit");
  oracle->add_option("--observable", oa.evolve.observable, "Observable string");
  oracle->add_option("--state", oa.evolve.state, "+, -, +i, -i, 0 or 1");
  oracle->add_option("--tmax", oa.evolve.t_max, "Final time");
  oracle->add_option("--dt", oa.evolve.dt, "Output spacing");
  oracle->add_option("--schedule", oa.evolve.schedule, "Gate schedule (JSON)");
  oracle->add_option("--projection", oa.projection_seed, "Print the class of this seed by dense projection");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*cls) return run_class(o, ca);
    if (*scan) return run_scan(o, sa);
    if (*fit_poly) return run_fit_poly(o, fa);
    if (*fit_exp) return run_fit_exp(o, fa);
    if (*evolve) return run_evolve(o, ea);
    if (*quench) return run_quench(o, ea);
    if (*oracle) return run_oracle(o, oa);
  } catch (const ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ModelError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DimensionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const IntegrationError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
