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

#include "dicke/coefficients.hpp"
#include "dicke/ladder.hpp"
#include "test_support.hpp"

using namespace dicke;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using dicke::testing::all_m;
using dicke::testing::all_species;
using dicke::testing::M;

namespace {

double max_deviation(const DickeExpansion& a, const DickeExpansion& b) {
  double d = 0.0;
  for (const auto& t : a.terms) d = std::max(d, std::abs(t.amplitude - b.amplitude(t.occupation)));
  for (const auto& t : b.terms) d = std::max(d, std::abs(t.amplitude - a.amplitude(t.occupation)));
  return d;
}

}  // namespace

TEST_CASE("highest-weight states", "[ladder]") {
  const auto h = highest_weight(SpinSpecies(4), 5);
  REQUIRE(h.terms.size() == 1);
  CHECK(h.terms[0].occupation == OccupationVector{5, 0, 0, 0, 0});
  CHECK(h.terms[0].amplitude == 1.0);
  CHECK(h.m == M(10));
  CHECK(highest_weight(SpinSpecies(1), 3).terms[0].occupation == OccupationVector{3, 0});
  CHECK(highest_weight(SpinSpecies(2), 1).terms[0].occupation == OccupationVector{1, 0, 0});
  CHECK_THROWS_AS(highest_weight(SpinSpecies(2), 0), DomainError);
}

TEST_CASE("single ladder steps", "[ladder]") {
  SECTION("lowering |J,J> has one open channel") {
    const auto x = apply_lowering(to_raw(highest_weight(SpinSpecies(4), 5)));
    REQUIRE(x.terms.size() == 1);
    CHECK(x.terms[0].occupation == OccupationVector{4, 1, 0, 0, 0});
    CHECK_THAT(x.terms[0].amplitude, WithinAbs(2.0 * std::sqrt(5.0), 1e-14));
  }
  SECTION("lowering the lowest weight annihilates it") {
    const RawExpansion low{SpinSpecies(3), 4, {{{0, 0, 0, 4}, 1.0}}};
    CHECK(apply_lowering(low).terms.empty());
  }
  SECTION("raising the highest weight annihilates it") {
    CHECK(apply_raising(to_raw(highest_weight(SpinSpecies(2), 6))).terms.empty());
  }
  SECTION("J+ J- on |J,J> gives 2J") {
    for (auto s : all_species()) {
      const auto h = to_raw(highest_weight(s, 4));
      const auto back = apply_raising(apply_lowering(h));
      REQUIRE(back.terms.size() == 1);
      CHECK_THAT(back.terms[0].amplitude, WithinAbs(s.twice_spin() * 4.0, 1e-12));
    }
  }
  SECTION("lowering moves every term down by one unit of M") {
    const auto x = apply_lowering(to_raw(dicke_expansion(SpinSpecies(3), 5, Magnetization::parse("3/2"))));
    for (const auto& t : x.terms) CHECK(t.occupation.twice_magnetization(SpinSpecies(3)) == 1);
  }
}

TEST_CASE("twice-lowered spin-1 N = 10", "[ladder]") {
  auto x = to_raw(highest_weight(SpinSpecies(2), 10));
  x = apply_lowering(apply_lowering(x));
  const auto n = normalize(x);
  CHECK(n.m == M(8));
  CHECK_THAT(n.amplitude({9, 0, 1}), WithinAbs(0.2294, 5e-5));
  CHECK_THAT(n.amplitude({8, 2, 0}), WithinAbs(0.9733, 5e-5));
}

TEST_CASE("raising the M = 0 state reproduces M = 1", "[ladder]") {
  const auto up = normalize(apply_raising(to_raw(dicke_expansion(SpinSpecies(2), 10, M(0)))));
  CHECK(up.m == M(1));
  CHECK(max_deviation(up, dicke_expansion(SpinSpecies(2), 10, M(1))) <= 1e-12);
}

TEST_CASE("oracle values", "[ladder]") {
  const auto x = oracle_expansion(SpinSpecies(4), 5, M(8));
  REQUIRE(x.terms.size() == 2);
  CHECK_THAT(x.amplitude({4, 0, 1, 0, 0}), WithinAbs(0.3974, 5e-5));
  CHECK_THAT(x.amplitude({3, 2, 0, 0, 0}), WithinAbs(0.9177, 5e-5));

  const auto y = oracle_expansion(SpinSpecies(2), 10, M(-1));
  CHECK_THAT(y.amplitude({4, 1, 5}), WithinAbs(0.1225, 5e-5));
  CHECK_THAT(y.amplitude({2, 5, 3}), WithinAbs(0.6929, 5e-5));

  for (int n = 1; n <= 20; ++n)
    for (auto m : all_m(SpinSpecies(1), n)) {
      const auto z = oracle_expansion(SpinSpecies(1), n, m);
      REQUIRE(z.terms.size() == 1);
      REQUIRE_THAT(z.terms[0].amplitude, WithinAbs(1.0, 1e-15));
    }
  CHECK_THROWS_AS(oracle_expansion(SpinSpecies(2), 3, M(4)), DomainError);
}

TEST_CASE("oracle matches the closed form", "[ladder][property]") {
  double worst = 0.0;
  for (auto s : all_species())
    for (int n = 1; n <= 10; ++n)
      for (auto m : all_m(s, n)) {
        const auto o = oracle_expansion(s, n, m);
        const auto c = dicke_expansion(s, n, m);
        worst = std::max(worst, max_deviation(o, c));
        // same support as the enumerated basis
        const auto basis = enumerate_basis(s, n, m);
        REQUIRE(o.terms.size() == basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) REQUIRE(o.terms[i].occupation == basis[i]);
      }
  CHECK(worst <= 1e-10);
}

TEST_CASE("one lowering step maps |J,M> to |J,M-1>", "[ladder][property]") {
  for (auto s : all_species())
    for (int n = 1; n <= 10; ++n)
      for (auto m : all_m(s, n)) {
        if (m.twice() == -s.twice_spin() * n) continue;
        const auto lowered = normalize(apply_lowering(to_raw(dicke_expansion(s, n, m))));
        REQUIRE(lowered.m.twice() == m.twice() - 2);
        REQUIRE(max_deviation(lowered, dicke_expansion(s, n, lowered.m)) <= 1e-10);
      }
}

TEST_CASE("J-squared expectation equals J(J+1)", "[ladder][property]") {
  CHECK_THAT(total_spin_expectation(highest_weight(SpinSpecies(2), 10)), WithinAbs(110.0, 1e-12));
  CHECK_THAT(total_spin_expectation(oracle_expansion(SpinSpecies(3), 6, M(0))), WithinAbs(90.0, 1e-10));
  for (auto s : all_species())
    for (int n = 1; n <= 10; ++n) {
      const double j = s.twice_spin() * n / 2.0;
      for (auto m : all_m(s, n)) {
        REQUIRE_THAT(total_spin_expectation(dicke_expansion(s, n, m)), WithinAbs(j * (j + 1), 1e-8));
        REQUIRE_THAT(total_spin_expectation(oracle_expansion(s, n, m)), WithinAbs(j * (j + 1), 1e-8));
      }
    }
}

TEST_CASE("a perturbed state has lower total spin", "[ladder]") {
  auto x = dicke_expansion(SpinSpecies(2), 6, M(0));
  x.terms[0].amplitude *= -1.0;
  CHECK(std::abs(total_spin_expectation(x) - 42.0) > 1e-3);
}

TEST_CASE("J- J+ acts as (J-M)(J+M+1)", "[ladder][property]") {
  for (auto s : all_species())
    for (int n = 1; n <= 8; ++n) {
      const double j = s.twice_spin() * n / 2.0;
      for (auto m : all_m(s, n)) {
        const auto x = dicke_expansion(s, n, m);
        const auto y = apply_lowering(apply_raising(to_raw(x)));
        const double factor = (j - m.value()) * (j + m.value() + 1);
        for (const auto& t : x.terms) {
          double got = 0.0;
          for (const auto& u : y.terms)
            if (u.occupation == t.occupation) got = u.amplitude;
          REQUIRE_THAT(got, WithinAbs(factor * t.amplitude, 1e-8));
        }
      }
    }
}

TEST_CASE("normalize guards its input", "[ladder]") {
  CHECK_THROWS_AS(normalize(RawExpansion{SpinSpecies(2), 2, {}}), DomainError);
  CHECK_THROWS_AS(normalize(RawExpansion{SpinSpecies(2), 2, {{{2, 0, 0}, 1.0}, {{1, 1, 0}, 1.0}}}), DomainError);
  const auto n = normalize(RawExpansion{SpinSpecies(2), 2, {{{1, 0, 1}, 3.0}, {{0, 2, 0}, 4.0}, {{0, 2, 0}, 1e-16}}});
  CHECK(n.terms.size() == 2);
  CHECK_THAT(n.norm_squared(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("exact ladder agrees with the exact closed form", "[ladder][exact]") {
  for (auto s : all_species())
    for (int n = 1; n <= 7; ++n)
      for (auto m : all_m(s, n)) {
        const auto e = oracle_expansion_exact(s, n, m);
        REQUIRE(e.terms.size() == enumerate_basis(s, n, m).size());
        for (const auto& t : e.terms) REQUIRE(t.amplitude_squared == closed_form_coefficient_squared(s, n, m, t.occupation));
      }
}

TEST_CASE("exact square-root helpers", "[ladder][exact]") {
  BigRational r;
  CHECK(detail::exact_sqrt(BigRational(9, 4), r));
  CHECK(r == BigRational(3, 2));
  CHECK_FALSE(detail::exact_sqrt(BigRational(2), r));
  // sqrt(2) + sqrt(8) = 3 sqrt(2), squared 18
  CHECK(detail::add_square_roots({BigRational(2), BigRational(8)}) == 18);
  CHECK_THROWS_AS(detail::add_square_roots({BigRational(2), BigRational(3)}), std::logic_error);
}
