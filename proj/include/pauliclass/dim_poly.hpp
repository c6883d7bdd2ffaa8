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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pauliclass/closure.hpp"
#include "pauliclass/errors.hpp"

namespace pauliclass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// D(L) = sum_j k_j L^j with exact rational coefficients k_0..k_N.
class DimensionPolynomial {
 public:
  DimensionPolynomial() : coeffs_{Rational(0)} {}
  explicit DimensionPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  }

  /// Nominal degree N (number of coefficients minus one).
  std::size_t degree() const { return coeffs_.size() - 1; }

  /// Degree after dropping vanishing leading coefficients.
  std::size_t effective_degree() const {
    std::size_t d = degree();
    while (d > 0 && coeffs_[d] == 0) --d;
    return d;
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Value at integer L; throws NotPolynomial when it is not an integer.
  BigInt at(std::int64_t L) const {
    const Rational v = (*this)(Rational(L));
    if (boost::multiprecision::denominator(v) != 1) {
      throw NotPolynomial("D(" + std::to_string(L) + ") = " + v.str() + " is not an integer");
    }
    return boost::multiprecision::numerator(v);
  }

  /// Integer and nonnegative at every L in [lo, hi].
  bool integer_valued_on(std::int64_t lo, std::int64_t hi) const {
    for (std::int64_t L = lo; L <= hi; ++L) {
      const Rational v = (*this)(Rational(L));
      if (boost::multiprecision::denominator(v) != 1 || v < 0) return false;
    }
    return true;
  }

  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
  }

  friend bool operator==(const DimensionPolynomial& a, const DimensionPolynomial& b) {
    const auto n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Rational ca = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
      const Rational cb = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
      if (ca != cb) return false;
    }
    return true;
  }

 private:
  std::vector<Rational> coeffs_;
};

enum class ValueSource { kEngine, kRecursion };

/// Values D(0), ..., D(N) at the nodes 0..N with their origin.
struct ValueVector {
  std::vector<BigInt> values;
  std::vector<ValueSource> sources;

  std::size_t degree() const { return values.empty() ? 0 : values.size() - 1; }
};

/// Exact solve of V(x_0..x_N) k = values by fraction-exact Gaussian
/// elimination. Nodes must be distinct.
inline DimensionPolynomial interpolate(std::span<const std::int64_t> nodes,
                                       std::span<const BigInt> values) {
  const std::size_t n = nodes.size();
  if (n == 0 || values.size() != n) throw Error("interpolation needs matching, nonempty nodes and values");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    Rational p = 1;
    for (std::size_t c = 0; c < n; ++c) {
      a[r][c] = p;
      p *= nodes[r];
    }
    a[r][n] = Rational(values[r]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error("interpolation nodes are not distinct");
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> k(n);
  for (std::size_t r = 0; r < n; ++r) k[r] = a[r][n] / a[r][r];
  return DimensionPolynomial(std::move(k));
}

/// Coefficients k_0..k_N from values at the nodes 0..N.
inline DimensionPolynomial solve_vandermonde(const ValueVector& v) {
  std::vector<std::int64_t> nodes(v.values.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = static_cast<std::int64_t>(i);
  return interpolate(nodes, v.values);
}

/// Values of the XY-chain class dimension D^N at L = 0..N, built from the
/// lower polynomials D^0..D^{N-1}:
///   zero where the chain is too short to host class N,
///   D^{2m-N}(m) by the mirror relation D^n(L) = D^{2L-n}(L),
///   4^N - 2 sum_{n<N} D^n(N) at m = N, since all classes fill 4^L.
inline ValueVector xy_value_vector(std::size_t N, std::span<const DimensionPolynomial> lower) {
  if (lower.size() < N) {
    throw Error("D^" + std::to_string(N) + " needs D^0..D^" + std::to_string(N - 1) + ", got " +
                std::to_string(lower.size()) + " polynomials");
  }
  ValueVector v;
  for (std::size_t m = 0; m <= N; ++m) {
    v.sources.push_back(ValueSource::kRecursion);
    if (m == N) {
      BigInt total = BigInt(1) << (2 * N);
      for (std::size_t n = 0; n < N; ++n) total -= 2 * lower[n].at(static_cast<std::int64_t>(N));
      v.values.push_back(total);
    } else if (2 * m < N) {
      // m <= ceil(N/2 - 1)
      v.values.push_back(0);
    } else {
      // ceil(2(m - N/2)) = 2m - N
      v.values.push_back(lower[2 * m - N].at(static_cast<std::int64_t>(m)));
    }
  }
  return v;
}

/// D^0..D^{max_degree} of the open XY chain by recursion from D^0 = 1.
inline std::vector<DimensionPolynomial> xy_dimension_polynomials(std::size_t max_degree) {
  std::vector<DimensionPolynomial> polys;
  for (std::size_t N = 0; N <= max_degree; ++N) {
    polys.push_back(solve_vandermonde(xy_value_vector(N, polys)));
  }
  return polys;
}

struct PolynomialFit {
  DimensionPolynomial poly;
  std::vector<std::int64_t> fitted_at;
  std::vector<std::int64_t> validated_at;
};

/// Interpolate the first degree+1 samples and require the rest to match.
inline PolynomialFit fit_values(std::span<const std::int64_t> sizes, std::span<const BigInt> values,
                                std::size_t degree) {
  if (sizes.size() != values.size()) throw Error("sizes and values differ in length");
  if (sizes.size() < degree + 2) {
    throw Error("degree " + std::to_string(degree) + " fit needs " + std::to_string(degree + 2) +
                " sizes (one held out), got " + std::to_string(sizes.size()));
  }
  PolynomialFit fit;
  fit.fitted_at.assign(sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(degree + 1));
  fit.poly = interpolate(fit.fitted_at, values.first(degree + 1));
  for (std::size_t i = degree + 1; i < sizes.size(); ++i) {
    if (fit.poly(Rational(sizes[i])) != Rational(values[i])) {
      throw NotPolynomial("not polynomial of stated degree " + std::to_string(degree) +
                          ": prediction " + fit.poly(Rational(sizes[i])).str() + " at L=" +
                          std::to_string(sizes[i]) + " but counted " + values[i].str());
    }
    fit.validated_at.push_back(sizes[i]);
  }
  return fit;
}

/// Smallest degree whose interpolant reproduces every held-out sample.
inline PolynomialFit detect_degree(std::span<const std::int64_t> sizes,
                                   std::span<const BigInt> values) {
  for (std::size_t d = 0; d + 2 <= sizes.size(); ++d) {
    try {
      return fit_values(sizes, values, d);
    } catch (const NotPolynomial&) {
    }
  }
  throw NotPolynomial("no polynomial of degree <= " + std::to_string(sizes.size() - 2) +
                      " reproduces the held-out samples");
}

namespace detail {

template <class CountAt>
std::vector<BigInt> count_sizes(CountAt&& count_at, std::span<const std::int64_t> sizes) {
  std::vector<BigInt> values;
  for (auto L : sizes) {
    const OedResult r = count_at(L);
    if (!r.complete) {
      throw BudgetExhausted("class incomplete at L=" + std::to_string(L) + " after " +
                            std::to_string(r.count) + " members");
    }
    values.emplace_back(r.count);
  }
  return values;
}

}  // namespace detail

/// Fit a degree-N polynomial to engine counts at sizes[0..N] and validate
/// it at every later size. `count_at(L)` returns an OedResult.
template <class CountAt>
PolynomialFit fit_from_engine(CountAt&& count_at, std::size_t degree,
                              std::span<const std::int64_t> sizes) {
  const auto values = detail::count_sizes(count_at, sizes);
  return fit_values(sizes, values, degree);
}

/// Same as fit_from_engine but searches for the degree.
template <class CountAt>
PolynomialFit detect_degree_from_engine(CountAt&& count_at, std::span<const std::int64_t> sizes) {
  const auto values = detail::count_sizes(count_at, sizes);
  return detect_degree(sizes, values);
}

/// Counting callback for a model family and a seed family.
inline auto class_counter(std::function<Hamiltonian(std::int64_t)> model,
                          std::function<PauliString(std::int64_t)> seed,
                          std::size_t budget = kDefaultBudget) {
  return [model = std::move(model), seed = std::move(seed), budget](std::int64_t L) {
    return oed(model(L), seed(L), budget);
  };
}

}  // namespace pauliclass
