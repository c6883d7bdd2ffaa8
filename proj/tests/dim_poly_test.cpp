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

#include "pauliclass/dim_poly.hpp"

#include "gtest/gtest.h"

using namespace pauliclass;

namespace {

Rational R(long n, long d = 1) { return Rational(n) / d; }

Hamiltonian xy(std::int64_t L) {
  return build_xy(XYCouplings::random(static_cast<std::size_t>(L), {0.4, 1.6, 77}));
}

/// Seed of XY class N on L sites: X_n for N = 2n - 1, Z_1...Z_n for N = 2n.
PauliString xy_class_seed(std::size_t N, std::size_t L) {
  PauliString p(L);
  if (N == 0) return p;
  const std::size_t n = (N + 1) / 2;
  if (N % 2 == 1) {
    p.set(n - 1, 'X');
  } else {
    for (std::size_t m = 0; m < n; ++m) p.set(m, 'Z');
  }
  return p;
}

const DimensionPolynomial kD5({R(0), R(4, 10), R(-5, 3), R(7, 3), R(-4, 3), R(4, 15)});

}  // namespace

TEST(solve_vandermonde, linear_and_constant) {
  const auto lin = solve_vandermonde({{0, 2}, {}});
  EXPECT_EQ(lin, DimensionPolynomial({R(0), R(2)}));
  EXPECT_EQ(lin.degree(), 1u);
  const auto one = solve_vandermonde({{1}, {}});
  EXPECT_EQ(one, DimensionPolynomial({R(1)}));
  EXPECT_EQ(one.at(123), 1);
}

TEST(solve_vandermonde, interpolates_exactly) {
  const ValueVector v{{5, -3, 0, 17, 1000, 2}, {}};
  const auto p = solve_vandermonde(v);
  for (std::size_t m = 0; m < v.values.size(); ++m) {
    EXPECT_EQ(p(Rational(static_cast<long>(m))), Rational(v.values[m]));
  }
}

TEST(solve_vandermonde, huge_values_stay_exact) {
  // 4^40 overflows 64 bits.
  ValueVector v;
  for (int m = 0; m <= 3; ++m) v.values.push_back(BigInt(1) << (80 + m));
  const auto p = solve_vandermonde(v);
  EXPECT_EQ(p.at(3), BigInt(1) << 83);
}

TEST(xy_value_vector, low_degrees) {
  const auto polys = xy_dimension_polynomials(2);
  EXPECT_EQ(polys[0], DimensionPolynomial({R(1)}));
  EXPECT_EQ(polys[1], DimensionPolynomial({R(0), R(2)}));
  EXPECT_EQ(polys[2], DimensionPolynomial({R(0), R(-1), R(2)}));

  EXPECT_EQ(xy_value_vector(1, std::span(polys).first(1)).values, (std::vector<BigInt>{0, 2}));
  // Hand application of the recursion: zeros for m <= 1, D^1(2) = 4 by the
  // mirror relation, and 4^3 - 2 (D^0 + D^1 + D^2)(3) = 64 - 2 (1 + 6 + 15).
  EXPECT_EQ(xy_value_vector(3, polys).values, (std::vector<BigInt>{0, 0, 4, 20}));
}

TEST(xy_value_vector, middle_entry_and_missing_polynomials) {
  const auto polys = xy_dimension_polynomials(4);
  const auto v5 = xy_value_vector(5, polys);
  EXPECT_EQ(v5.values[3], 6);  // D^1(3)
  EXPECT_EQ(v5.values[0], 0);
  EXPECT_EQ(v5.values[1], 0);
  EXPECT_EQ(v5.values[2], 0);
  EXPECT_EQ(v5.values[4], 56);  // D^3(4)
  EXPECT_THROW(xy_value_vector(5, std::span(polys).first(3)), Error);
}

TEST(xy_dimension_polynomials, degree_five_coefficients) {
  const auto polys = xy_dimension_polynomials(5);
  EXPECT_EQ(polys[5], kD5);
  EXPECT_EQ(polys[5].coeff_strings(),
            (std::vector<std::string>{"0", "2/5", "-5/3", "7/3", "-4/3", "4/15"}));
}

TEST(xy_dimension_polynomials, integer_valued_and_vanishing_at_zero) {
  const auto polys = xy_dimension_polynomials(12);
  for (std::size_t N = 0; N < polys.size(); ++N) {
    EXPECT_EQ(polys[N].effective_degree(), N);
    EXPECT_TRUE(polys[N].integer_valued_on(0, 60)) << N;
    if (N > 0) EXPECT_EQ(polys[N].coeffs()[0], 0);
  }
}

TEST(xy_dimension_polynomials, match_engine_counts) {
  const auto polys = xy_dimension_polynomials(7);
  for (std::int64_t L = 1; L <= 8; ++L) {
    const auto h = xy(L);
    for (std::size_t N = 0; N <= std::min<std::size_t>(7, 2 * L); ++N) {
      const auto c = generate_class(h, xy_class_seed(N, static_cast<std::size_t>(L)));
      ASSERT_TRUE(c.complete());
      EXPECT_EQ(BigInt(c.size()), polys[N].at(L)) << "N=" << N << " L=" << L;
    }
  }
}

TEST(xy_dimension_polynomials, mirror_symmetry_at_engine_points) {
  const auto polys = xy_dimension_polynomials(12);
  for (std::int64_t L = 1; L <= 6; ++L) {
    for (std::int64_t n = 0; n <= 2 * L; ++n) {
      const auto a = static_cast<std::size_t>(n), b = static_cast<std::size_t>(2 * L - n);
      EXPECT_EQ(polys[a].at(L), polys[b].at(L)) << "n=" << n << " L=" << L;
    }
  }
}

TEST(fit_from_engine, x3_reproduces_degree_five) {
  const std::vector<std::int64_t> sizes = {3, 4, 5, 6, 7, 8, 9};
  const auto fit = fit_from_engine(
      class_counter(xy, [](std::int64_t L) { return parse_pauli("X3", static_cast<std::size_t>(L)); }),
      5, sizes);
  EXPECT_EQ(fit.poly, kD5);
  EXPECT_EQ(fit.validated_at, (std::vector<std::int64_t>{9}));
}

TEST(fit_from_engine, onsager_quadratic) {
  const std::vector<std::int64_t> sizes = {4, 5, 6, 7, 8};
  const auto fit = fit_from_engine(
      class_counter(xy, [](std::int64_t L) { return parse_pauli("Z2", static_cast<std::size_t>(L)); }),
      2, sizes);
  EXPECT_EQ(fit.poly, DimensionPolynomial({R(0), R(-1), R(2)}));
  EXPECT_EQ(fit.validated_at.size(), 2u);
}

TEST(fit_from_engine, wrong_degree_is_rejected) {
  const std::vector<std::int64_t> sizes = {3, 4, 5, 6};
  auto counter =
      class_counter(xy, [](std::int64_t L) { return parse_pauli("Z1", static_cast<std::size_t>(L)); });
  EXPECT_THROW(fit_from_engine(counter, 1, sizes), NotPolynomial);
  EXPECT_THROW(fit_from_engine(counter, 3, sizes), Error);  // no held-out size left
}

TEST(fit_from_engine, incomplete_class_is_reported) {
  const std::vector<std::int64_t> sizes = {6, 7, 8};
  auto counter = class_counter(
      [](std::int64_t n) { return build_xyzz(XYZZCouplings::uniform(static_cast<std::size_t>(n), 1.0)); },
      [](std::int64_t n) { return parse_pauli("X1", static_cast<std::size_t>(n)); }, 100);
  EXPECT_THROW(fit_from_engine(counter, 1, sizes), BudgetExhausted);
}

TEST(detect_degree, kitaev_site_polynomials) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::int64_t> sizes;
    for (std::int64_t L = static_cast<std::int64_t>(n) + 1; L <= static_cast<std::int64_t>(2 * n + 5); ++L) {
      sizes.push_back(L);
    }
    const auto fit = detect_degree_from_engine(
        class_counter(
            [](std::int64_t L) {
              return build_kitaev(InteractionGraph::chain(static_cast<std::size_t>(L),
                                                          std::vector<double>(L - 1, 1.0)));
            },
            [n](std::int64_t L) { return PauliString::single(static_cast<std::size_t>(L), n - 1, 'X'); }),
        sizes);
    EXPECT_LE(fit.poly.effective_degree(), n);
    EXPECT_GE(fit.validated_at.size(), 2u);
  }
}

TEST(detect_degree, pure_values) {
  const std::vector<std::int64_t> sizes = {1, 2, 3, 4, 5};
  const std::vector<BigInt> cubes = {1, 8, 27, 64, 125};
  const auto fit = detect_degree(sizes, cubes);
  EXPECT_EQ(fit.poly, DimensionPolynomial({R(0), R(0), R(0), R(1)}));
  const std::vector<BigInt> pow2 = {2, 4, 8, 16, 32};
  EXPECT_THROW(detect_degree(sizes, pow2), NotPolynomial);
}
