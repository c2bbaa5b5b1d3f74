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
#include <map>

#include "dicke/antisym.hpp"
#include "test_support.hpp"

using namespace dicke;
using Catch::Matchers::WithinAbs;
using dicke::testing::all_species;

namespace {

double amplitude_of(const FirstQuantizedState& x, const std::vector<int>& assignment) {
  double a = 0.0;
  for (const auto& t : x.terms)
    if (t.assignment == assignment) a += t.amplitude;
  return a;
}

}  // namespace

TEST_CASE("antisymmetric state counts", "[antisym]") {
  const std::vector<long> expected{1, 4, 11, 26};
  for (int ts = 1; ts <= 4; ++ts) {
    CHECK(antisym_count(SpinSpecies(ts)) == expected[ts - 1]);
    CHECK(enumerate_all_antisym(SpinSpecies(ts)).size() == static_cast<std::size_t>(expected[ts - 1]));
  }
}

TEST_CASE("spin-1/2 singlet", "[antisym]") {
  const auto all = enumerate_all_antisym(SpinSpecies(1));
  REQUIRE(all.size() == 1);
  const auto& s = all[0];
  CHECK(s.n_particles == 2);
  CHECK_THAT(amplitude_of(s, {1, -1}), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
  CHECK_THAT(amplitude_of(s, {-1, 1}), WithinAbs(-1.0 / std::sqrt(2.0), 1e-15));
}

TEST_CASE("spin-1 three-particle state", "[antisym]") {
  const auto x = elementary_antisym(SpinSpecies(2), {2, 0, -2});
  REQUIRE(x.terms.size() == 6);
  const double a = 1.0 / std::sqrt(6.0);
  CHECK_THAT(amplitude_of(x, {2, 0, -2}), WithinAbs(a, 1e-15));
  CHECK_THAT(amplitude_of(x, {2, -2, 0}), WithinAbs(-a, 1e-15));
  CHECK_THAT(amplitude_of(x, {0, 2, -2}), WithinAbs(-a, 1e-15));
  CHECK_THAT(amplitude_of(x, {0, -2, 2}), WithinAbs(a, 1e-15));
  CHECK_THAT(amplitude_of(x, {-2, 2, 0}), WithinAbs(a, 1e-15));
  CHECK_THAT(amplitude_of(x, {-2, 0, 2}), WithinAbs(-a, 1e-15));
  CHECK(is_antisymmetric(x));
}

TEST_CASE("a sign pattern with two flipped terms is not antisymmetric", "[antisym]") {
  // Same six terms with the signs of |d,0,u> and |d,u,0> exchanged.
  const double a = 1.0 / std::sqrt(6.0);
  const FirstQuantizedState wrong{SpinSpecies(2), 3,
                                  {{{2, 0, -2}, a},
                                   {{2, -2, 0}, -a},
                                   {{-2, 0, 2}, a},
                                   {{-2, 2, 0}, -a},
                                   {{0, 2, -2}, -a},
                                   {{0, -2, 2}, a}}};
  CHECK_THAT(wrong.norm_squared(), WithinAbs(1.0, 1e-15));
  CHECK_FALSE(is_antisymmetric(wrong));
}

TEST_CASE("five spin-2 particles", "[antisym]") {
  const auto x = elementary_antisym(SpinSpecies(4), {4, 2, 0, -2, -4});
  CHECK(x.terms.size() == 120);
  for (const auto& t : x.terms) CHECK_THAT(std::abs(t.amplitude), WithinAbs(1.0 / std::sqrt(120.0), 1e-15));
  CHECK(is_antisymmetric(x));
}

TEST_CASE("invalid level lists", "[antisym]") {
  CHECK_THROWS_AS(elementary_antisym(SpinSpecies(2), {2, 2}), DomainError);
  CHECK_THROWS_AS(elementary_antisym(SpinSpecies(2), {0, 2}), DomainError);
  CHECK_THROWS_AS(elementary_antisym(SpinSpecies(2), {2}), DomainError);
  CHECK_THROWS_AS(elementary_antisym(SpinSpecies(2), {4, 2}), DomainError);
  CHECK_THROWS_AS(elementary_antisym(SpinSpecies(1), {1, -1, -1}), DomainError);
}

TEST_CASE("is_antisymmetric on other inputs", "[antisym]") {
  const double r = 1.0 / std::sqrt(2.0);
  const FirstQuantizedState symmetric{SpinSpecies(2), 2, {{{2, 0}, r}, {{0, 2}, r}}};
  CHECK_FALSE(is_antisymmetric(symmetric));
  FirstQuantizedState scaled = elementary_antisym(SpinSpecies(1), {1, -1});
  for (auto& t : scaled.terms) t.amplitude *= 0.9;
  CHECK(is_antisymmetric(scaled));
}

TEST_CASE("enumerated states are normalized, antisymmetric and orthogonal", "[antisym][property]") {
  for (auto s : all_species()) {
    const auto all = enumerate_all_antisym(s);
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE_THAT(all[i].norm_squared(), WithinAbs(1.0, 1e-12));
      REQUIRE(is_antisymmetric(all[i]));
      for (std::size_t j = i + 1; j < all.size(); ++j) REQUIRE_THAT(inner_product(all[i], all[j]), WithinAbs(0.0, 1e-12));
    }
  }
}

TEST_CASE("pair multiplet J = 2s-1 lies in the elementary pair span", "[antisym][property]") {
  for (auto s : all_species()) {
    const auto rows = verify_pair_subspace(s);
    CHECK(rows.size() == static_cast<std::size_t>(2 * s.twice_spin() - 1));
    for (const auto& r : rows) CHECK(r.residual < 1e-10);
    // the edge members coincide with single elementary pair states
    CHECK_THAT(rows.front().best_overlap, WithinAbs(1.0, 1e-12));
    CHECK_THAT(rows.back().best_overlap, WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("lowering preserves antisymmetry", "[antisym][property]") {
  for (auto s : all_species())
    for (const auto& x : enumerate_all_antisym(s)) {
      const auto y = apply_lowering(x);
      if (!y.terms.empty()) REQUIRE(is_antisymmetric(y));
    }
}
