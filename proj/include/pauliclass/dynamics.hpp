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
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "pauliclass/closure.hpp"
#include "pauliclass/errors.hpp"
#include "pauliclass/hamiltonian.hpp"
#include "pauliclass/initial_state.hpp"
#include "pauliclass/pauli.hpp"

namespace pauliclass {

using SparseGenerator = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Matrix of A -> i[H, A] on the span of a class: if A = sum_m f_m P_m then
/// d f / dt = G f.
class AdjointGenerator {
 public:
  AdjointGenerator(std::shared_ptr<const EquivalenceClass> cls, SparseGenerator g, double norm)
      : cls_(std::move(cls)), g_(std::move(g)), coupling_norm_(norm) {}

  const EquivalenceClass& equivalence_class() const { return *cls_; }
  std::shared_ptr<const EquivalenceClass> class_ptr() const { return cls_; }
  const SparseGenerator& matrix() const { return g_; }
  std::size_t dimension() const { return static_cast<std::size_t>(g_.rows()); }
  double coupling_norm() const { return coupling_norm_; }

  bool is_antisymmetric() const {
    const SparseGenerator t = g_.transpose();
    return (g_ + t).norm() == 0.0;
  }

 private:
  std::shared_ptr<const EquivalenceClass> cls_;
  SparseGenerator g_;
  double coupling_norm_ = 0.0;
};

inline AdjointGenerator build_generator(const Hamiltonian& h,
                                        std::shared_ptr<const EquivalenceClass> cls) {
  if (!cls) throw Error("null class");
  if (!cls->complete()) throw BudgetExhausted("cannot build a generator on an incomplete class");
  if (cls->num_sites() != h.num_sites()) throw DimensionError("class and Hamiltonian sizes differ");
  const std::size_t D = cls->size();
  std::vector<Eigen::Triplet<double>> trip;
  for (std::size_t m = 0; m < D; ++m) {
    const PauliString pm = cls->member(m);
    for (const auto& t : h.terms()) {
      // [h_k, P_m] = 2 i^{ph} Q when they anticommute; i * that must be real.
      const ScaledPauli c = commutator(t.string, pm);
      if (c.is_zero()) continue;
      const int ph = (c.phase_power + 1) & 3;
      if (ph & 1) throw ConsistencyError("imaginary generator entry at " + format_pauli(pm));
      const auto n = cls->index_of(c.string);
      if (!n) {
        throw ConsistencyError("commutator leaves the class: " + format_pauli(c.string));
      }
      const double sign = ph == 0 ? 1.0 : -1.0;
      trip.emplace_back(static_cast<int>(*n), static_cast<int>(m),
                        sign * c.magnitude * t.coefficient);
    }
  }
  SparseGenerator g(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
  g.setFromTriplets(trip.begin(), trip.end());
  g.makeCompressed();
  AdjointGenerator out(std::move(cls), std::move(g), h.l1_norm());
  if (!out.is_antisymmetric()) throw ConsistencyError("generator is not antisymmetric");
  return out;
}

inline AdjointGenerator build_generator(const Hamiltonian& h, const EquivalenceClass& cls) {
  return build_generator(h, std::make_shared<const EquivalenceClass>(cls));
}

enum class Integrator { kAuto, kRungeKutta4, kDense, kKrylov };

struct EvolveOptions {
  Integrator integrator = Integrator::kAuto;
  double rk4_step = 0.0;                 // 0: min(0.01, 0.1 / ||h||_1)
  std::size_t auto_dense_max_dim = 400;  // kAuto uses dense below this size
  std::size_t dense_max_dim = 2000;
  std::size_t krylov_dim = 30;
  double krylov_tol = 1e-12;
  double max_drift_rate = 1e-9;  // allowed | ||f(t)|| - ||f(0)|| | per unit time
};

/// Per-time callback: (output index, time, coefficients, norm drift).
using TrajectoryObserver =
    std::function<void(std::size_t, double, const Eigen::VectorXd&, double)>;

namespace detail {

inline void check_times(std::span<const double> times) {
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(times[k]) || times[k] < 0.0 || (k > 0 && times[k] < times[k - 1])) {
      throw Error("output times must be finite, non-negative and non-decreasing");
    }
  }
}

class DriftMonitor {
 public:
  DriftMonitor(double norm0, double rate) : norm0_(norm0), rate_(rate) {}

  double check(double t, const Eigen::VectorXd& f) const {
    if (!f.allFinite()) throw IntegrationError("non-finite coefficients at t=" + std::to_string(t));
    const double drift = std::abs(f.norm() - norm0_);
    if (drift > rate_ * std::max(1.0, t) * std::max(1.0, norm0_)) {
      std::ostringstream msg;
      msg << "norm drift " << drift << " exceeds limit at t=" << t;
      throw IntegrationError(msg.str());
    }
    return drift;
  }

 private:
  double norm0_;
  double rate_;
};

inline void rk4_propagate(const SparseGenerator& g, double sign, Eigen::VectorXd f,
                          std::span<const double> times, double step, const DriftMonitor& mon,
                          const TrajectoryObserver& obs) {
  Eigen::VectorXd k1, k2, k3, k4;
  double t = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double span = times[k] - t;
    if (span > 0) {
      const auto n = static_cast<std::size_t>(std::ceil(span / step - 1e-12));
      const double hs = span / static_cast<double>(std::max<std::size_t>(n, 1));
      for (std::size_t s = 0; s < std::max<std::size_t>(n, 1); ++s) {
        k1 = sign * (g * f);
        k2 = sign * (g * (f + 0.5 * hs * k1));
        k3 = sign * (g * (f + 0.5 * hs * k2));
        k4 = sign * (g * (f + hs * k3));
        f += (hs / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      t = times[k];
    }
    obs(k, times[k], f, mon.check(times[k], f));
  }
}

inline void dense_propagate(const SparseGenerator& g, double sign, const Eigen::VectorXd& f0,
                            std::span<const double> times, const DriftMonitor& mon,
                            const TrajectoryObserver& obs) {
  // i*G is Hermitian; e^{sGt} = V e^{-i s lambda t} V^dagger.
  const Eigen::MatrixXcd iG = Eigen::MatrixXcd(Eigen::MatrixXd(g).cast<std::complex<double>>()) *
                              std::complex<double>(0, 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(iG);
  const Eigen::MatrixXcd& V = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::VectorXcd c = V.adjoint() * f0.cast<std::complex<double>>();
  for (std::size_t k = 0; k < times.size(); ++k) {
    Eigen::VectorXcd e(lam.size());
    for (Eigen::Index a = 0; a < lam.size(); ++a) {
      e(a) = c(a) * std::exp(std::complex<double>(0, -sign * lam(a) * times[k]));
    }
    const Eigen::VectorXd f = (V * e).real();
    obs(k, times[k], f, mon.check(times[k], f));
  }
}

/// Lanczos for the skew-symmetric operator sG: A v_j = beta_j v_{j+1} - beta_{j-1} v_{j-1}.
inline void krylov_propagate(const SparseGenerator& g, double sign, Eigen::VectorXd f,
                             std::span<const double> times, std::size_t m_max, double tol,
                             const DriftMonitor& mon, const TrajectoryObserver& obs) {
  const auto D = g.rows();
  const auto m_cap = static_cast<Eigen::Index>(std::max<std::size_t>(2, m_max));
  double t = 0.0;
  std::size_t k = 0;
  Eigen::MatrixXd V;
  while (k < times.size()) {
    if (times[k] <= t) {
      obs(k, times[k], f, mon.check(times[k], f));
      ++k;
      continue;
    }
    const double beta0 = f.norm();
    if (beta0 == 0.0) {
      for (; k < times.size(); ++k) obs(k, times[k], f, mon.check(times[k], f));
      break;
    }
    const Eigen::Index mlim = std::min<Eigen::Index>(m_cap, D);
    V.resize(D, mlim + 1);
    V.col(0) = f / beta0;
    std::vector<double> beta;
    Eigen::Index m = mlim;
    bool exact = false;
    for (Eigen::Index j = 0; j < mlim; ++j) {
      Eigen::VectorXd w = sign * (g * V.col(j));
      if (j > 0) w += beta.back() * V.col(j - 1);
      for (int pass = 0; pass < 2; ++pass) {
        w -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * w);
      }
      const double b = w.norm();
      beta.push_back(b);
      if (b <= 1e-12) {
        m = j + 1;
        exact = true;
        break;
      }
      V.col(j + 1) = w / b;
    }
    if (!exact && m == D) exact = true;
    // Projected skew-tridiagonal T (m x m); exp(T tau) e_1 via eigen of iT.
    Eigen::MatrixXcd iT = Eigen::MatrixXcd::Zero(m, m);
    for (Eigen::Index j = 0; j + 1 < m; ++j) {
      iT(j + 1, j) = std::complex<double>(0, beta[static_cast<std::size_t>(j)]);
      iT(j, j + 1) = std::complex<double>(0, -beta[static_cast<std::size_t>(j)]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(iT);
    const Eigen::MatrixXcd& W = es.eigenvectors();
    const Eigen::VectorXd& mu = es.eigenvalues();
    const Eigen::VectorXcd w0 = W.adjoint().col(0);
    auto y_of = [&](double tau) {
      Eigen::VectorXcd e(m);
      for (Eigen::Index a = 0; a < m; ++a) e(a) = w0(a) * std::exp(std::complex<double>(0, -mu(a) * tau));
      return Eigen::VectorXd((W * e).real());
    };
    const double beta_m = exact ? 0.0 : beta[static_cast<std::size_t>(m - 1)];
    auto err = [&](const Eigen::VectorXd& y) { return beta_m * std::abs(y(m - 1)); };

    bool advanced = false;
    while (k < times.size()) {
      const double tau = times[k] - t;
      const Eigen::VectorXd y = y_of(tau);
      if (err(y) > tol) break;
      const Eigen::VectorXd fk = beta0 * (V.leftCols(m) * y);
      obs(k, times[k], fk, mon.check(times[k], fk));
      ++k;
      advanced = true;
      if (k == times.size()) return;
    }
    // Restart from the last accepted output, or from an internal step.
    if (advanced) {
      const double tau = times[k - 1] - t;
      f = beta0 * (V.leftCols(m) * y_of(tau));
      t = times[k - 1];
      continue;
    }
    double tau = times[k] - t;
    Eigen::VectorXd y = y_of(tau);
    while (err(y) > tol) {
      tau *= 0.5;
      if (tau < 1e-14) throw IntegrationError("Krylov step size underflow");
      y = y_of(tau);
    }
    f = beta0 * (V.leftCols(m) * y);
    t += tau;
  }
}

}  // namespace detail

/// Propagates f(0) = f0 under df/dt = sign * G f and reports each output time.
inline void propagate(const AdjointGenerator& gen, const Eigen::VectorXd& f0,
                      std::span<const double> times, const TrajectoryObserver& observer,
                      const EvolveOptions& opt = {}, double sign = 1.0) {
  if (static_cast<std::size_t>(f0.size()) != gen.dimension()) {
    throw DimensionError("initial vector has wrong dimension");
  }
  detail::check_times(times);
  const detail::DriftMonitor mon(f0.norm(), opt.max_drift_rate);
  Integrator which = opt.integrator;
  if (which == Integrator::kAuto) {
    which = gen.dimension() <= opt.auto_dense_max_dim ? Integrator::kDense : Integrator::kKrylov;
  }
  switch (which) {
    case Integrator::kRungeKutta4: {
      double step = opt.rk4_step;
      if (step <= 0.0) {
        step = gen.coupling_norm() > 0 ? std::min(0.01, 0.1 / gen.coupling_norm()) : 0.01;
      }
      detail::rk4_propagate(gen.matrix(), sign, f0, times, step, mon, observer);
      break;
    }
    case Integrator::kDense:
      if (gen.dimension() > opt.dense_max_dim) {
        throw Unsupported("dense integrator limited to dimension " +
                          std::to_string(opt.dense_max_dim));
      }
      detail::dense_propagate(gen.matrix(), sign, f0, times, mon, observer);
      break;
    case Integrator::kKrylov:
    case Integrator::kAuto:
      detail::krylov_propagate(gen.matrix(), sign, f0, times, opt.krylov_dim,
                               opt.krylov_tol * std::max(1.0, f0.norm()), mon, observer);
      break;
  }
}

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> coefficients;
  std::vector<double> norm_drift;

  double max_drift() const {
    return norm_drift.empty() ? 0.0 : *std::max_element(norm_drift.begin(), norm_drift.end());
  }
};

inline Trajectory evolve(const AdjointGenerator& gen, const Eigen::VectorXd& f0,
                         std::span<const double> times, const EvolveOptions& opt = {},
                         double sign = 1.0) {
  Trajectory tr;
  propagate(
      gen, f0, times,
      [&](std::size_t, double t, const Eigen::VectorXd& f, double drift) {
        tr.times.push_back(t);
        tr.coefficients.push_back(f);
        tr.norm_drift.push_back(drift);
      },
      opt, sign);
  return tr;
}

/// 0, dt, 2 dt, ... up to t_max inclusive.
inline std::vector<double> time_grid(double t_max, double dt) {
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw Error("t_max must be finite and >= 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error("dt must be positive");
  const auto n = static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = static_cast<double>(k) * dt;
  return out;
}

/// Sparse linear functional f -> <A(t)> for an initial state 2^{-L}(I + b.sigma).
struct ObservableWeights {
  std::vector<std::pair<std::size_t, double>> entries;

  double operator()(const Eigen::VectorXd& f) const {
    double s = 0.0;
    for (const auto& [i, w] : entries) s += w * f(static_cast<Eigen::Index>(i));
    return s;
  }
};

inline ObservableWeights observable_weights(const EquivalenceClass& cls, const InitialState& s) {
  const std::size_t L = cls.num_sites();
  s.validate(L);
  ObservableWeights w;
  if (auto i = cls.index_of(PauliString(L))) w.entries.emplace_back(*i, 1.0);
  const char axes[3] = {'X', 'Y', 'Z'};
  for (int k = 0; k < 3; ++k) {
    if (s.bloch[k] == 0.0) continue;
    if (auto i = cls.index_of(PauliString::single(L, s.site, axes[k]))) {
      w.entries.emplace_back(*i, s.bloch[k]);
    }
  }
  return w;
}

inline std::vector<double> observable(const EquivalenceClass& cls, const Trajectory& tr,
                                      const InitialState& s) {
  const auto w = observable_weights(cls, s);
  std::vector<double> out;
  out.reserve(tr.coefficients.size());
  for (const auto& f : tr.coefficients) out.push_back(w(f));
  return out;
}

struct RelaxationRequest {
  std::size_t site = 0;   // 0-based
  char observable = 'X';  // measured single-site Pauli on `site`
  InitialState state;
};

struct RelaxationRow {
  double t = 0.0;
  std::size_t site = 0;
  std::string observable;
  double value = 0.0;
  double norm_drift = 0.0;
};

/// <sigma^a_i(t)> for each request, computed inside the class of sigma^a_i.
inline std::vector<RelaxationRow> run_relaxation_experiment(
    const Hamiltonian& h, std::span<const RelaxationRequest> requests, double t_max, double dt,
    std::size_t budget = kDefaultBudget, const EvolveOptions& opt = {}) {
  const auto times = time_grid(t_max, dt);
  std::vector<RelaxationRow> rows;
  for (const auto& req : requests) {
    const PauliString a = PauliString::single(h.num_sites(), req.site, req.observable);
    req.state.validate(h.num_sites());
    auto cls = std::make_shared<const EquivalenceClass>(generate_class(h, a, budget));
    if (!cls->complete()) {
      throw BudgetExhausted("class of " + format_pauli(a) + " exceeds the budget of " +
                            std::to_string(budget) + " strings");
    }
    const AdjointGenerator gen = build_generator(h, cls);
    Eigen::VectorXd f0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(gen.dimension()));
    f0(static_cast<Eigen::Index>(*cls->index_of(a))) = 1.0;
    const auto w = observable_weights(*cls, req.state);
    const std::string name = format_pauli(a);
    propagate(
        gen, f0, times,
        [&](std::size_t, double t, const Eigen::VectorXd& f, double drift) {
          rows.push_back({t, req.site, name, w(f), drift});
        },
        opt);
  }
  return rows;
}

}  // namespace pauliclass
