// Copyright 2026 The Dicke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dicke/linalg.hpp"

using namespace dicke;
using Catch::Matchers::WithinAbs;

namespace {

RealMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  RealMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

RealMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = g(rng);
  return m;
}

}  // namespace

TEST_CASE("small spectra", "[linalg]") {
  const auto id = symmetric_eigenvalues(RealMatrix::identity(3));
  for (double v : id) CHECK_THAT(v, WithinAbs(1.0, 1e-15));

  const double c = 0.37;
  const auto pair = symmetric_eigenvalues(from_rows({{0, c}, {c, 0}}));
  CHECK_THAT(pair[0], WithinAbs(-c, 1e-15));
  CHECK_THAT(pair[1], WithinAbs(c, 1e-15));

  const double t = 1.0 / 3.0;
  const auto circ = symmetric_eigenvalues(from_rows({{0, t, t}, {t, 0, t}, {t, t, 0}}));
  CHECK_THAT(circ[0], WithinAbs(-t, 1e-14));
  CHECK_THAT(circ[1], WithinAbs(-t, 1e-14));
  CHECK_THAT(circ[2], WithinAbs(2 * t, 1e-14));
}

TEST_CASE("eigensolver rejects bad input", "[linalg]") {
  CHECK_THROWS_AS(symmetric_eigen(RealMatrix(2, 3)), DomainError);
  CHECK_THROWS_AS(symmetric_eigen(from_rows({{0, 1}, {0, 0}})), DomainError);
  ComplexMatrix h(2, 2);
  h(0, 1) = Complex(0, 1);
  h(1, 0) = Complex(0, 1);
  CHECK_THROWS_AS(hermitian_eigenvalues(h), DomainError);
}

TEST_CASE("eigen decomposition reconstructs random symmetric matrices", "[linalg][property]") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const RealMatrix a = random_symmetric(rng, n);
    const auto e = symmetric_eigen(a);
    REQUIRE(e.sweeps <= kJacobiMaxSweeps);
    for (std::size_t i = 1; i < n; ++i) REQUIRE(e.values[i - 1] <= e.values[i]);
    RealMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = e.values[i];
    const RealMatrix back = e.vectors * d * e.vectors.adjoint();
    REQUIRE(max_abs_diff(back, a) < 1e-12);
    REQUIRE(max_abs_diff(e.vectors.adjoint() * e.vectors, RealMatrix::identity(n)) < 1e-12);
    double trace = 0.0;
    for (double v : e.values) trace += v;
    REQUIRE_THAT(trace, WithinAbs(a.trace(), 1e-12));
  }
}

TEST_CASE("Hermitian spectra through the real embedding", "[linalg]") {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  ComplexMatrix h(2, 2);
  h(0, 0) = h(1, 1) = 2.0;
  h(0, 1) = Complex(0, 1);
  h(1, 0) = Complex(0, -1);
  const auto v = hermitian_eigenvalues(h);
  CHECK_THAT(v[0], WithinAbs(1.0, 1e-14));
  CHECK_THAT(v[1], WithinAbs(3.0, 1e-14));

  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 8;
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = g(rng);
      for (std::size_t j = i + 1; j < n; ++j) {
        a(i, j) = Complex(g(rng), g(rng));
        a(j, i) = std::conj(a(i, j));
      }
    }
    const auto vals = hermitian_eigenvalues(a);
    double sum = 0.0, sum_sq = 0.0;
    for (double x : vals) sum += x, sum_sq += x * x;
    // trace and Frobenius norm are spectral invariants
    double frob = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) frob += std::norm(a(i, j));
    REQUIRE_THAT(sum, WithinAbs(a.trace().real(), 1e-11));
    REQUIRE_THAT(sum_sq, WithinAbs(frob, 1e-10));
  }
}

TEST_CASE("matrix helpers", "[linalg]") {
  const RealMatrix a = from_rows({{1, 2}, {3, 4}});
  const RealMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(max_abs_diff(a * b, from_rows({{2, 1}, {4, 3}})) == 0.0);
  CHECK(a.trace() == 5.0);
  CHECK(a.hermiticity_defect() == 1.0);
  CHECK_THROWS_AS(a * RealMatrix(3, 3), std::invalid_argument);
}
