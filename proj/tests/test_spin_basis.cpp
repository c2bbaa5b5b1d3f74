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

#include <functional>
#include <map>
#include <set>

#include "dicke/basis.hpp"
#include "test_support.hpp"

using namespace dicke;
using dicke::testing::all_m;
using dicke::testing::all_species;
using dicke::testing::M;

TEST_CASE("half-integers parse exactly", "[spin]") {
  CHECK(parse_half_integer("7/2") == 7);
  CHECK(parse_half_integer("-1") == -2);
  CHECK(parse_half_integer("+1/2") == 1);
  CHECK(parse_half_integer("0") == 0);
  CHECK(parse_half_integer("-3/1") == -6);
  CHECK(format_half_integer(-3) == "-3/2");
  CHECK(format_half_integer(4) == "2");
  for (const char* bad : {"", "1/3", "x", "1.5", "-", "3/0", "2/"})
    CHECK_THROWS_AS(parse_half_integer(bad), DomainError);
}

TEST_CASE("spin species accept 1/2 through 2", "[spin]") {
  CHECK(SpinSpecies::parse("1/2").twice_spin() == 1);
  CHECK(SpinSpecies::parse("3/2").levels() == 4);
  CHECK(SpinSpecies::parse("2").twice_m(4) == -4);
  CHECK(SpinSpecies(3).level_index(-1) == 2);
  CHECK(SpinSpecies(2).level_labels() == std::vector<std::string>{"n_+1", "n_0", "n_-1"});
  CHECK(SpinSpecies(3).level_labels() ==
        std::vector<std::string>{"n_+3/2", "n_+1/2", "n_-1/2", "n_-3/2"});
  CHECK_THROWS_AS(SpinSpecies::parse("5/2"), DomainError);
  CHECK_THROWS_AS(SpinSpecies::parse("0"), DomainError);
  CHECK_THROWS_AS(SpinSpecies(2).level_index(1), DomainError);
}

TEST_CASE("mirror reverses the counts", "[spin]") {
  CHECK(mirror(OccupationVector{4, 1, 5}) == OccupationVector{5, 1, 4});
  CHECK(mirror(OccupationVector{3, 4, 3}) == OccupationVector{3, 4, 3});
  CHECK(mirror(OccupationVector{1, 0, 5, 0}) == OccupationVector{0, 5, 0, 1});
  const OccupationVector v{2, 0, 1, 3, 0};
  CHECK(mirror(mirror(v)) == v);
  CHECK(mirror(v).twice_magnetization(SpinSpecies(4)) == -v.twice_magnetization(SpinSpecies(4)));
}

TEST_CASE("occupation counts are non-negative", "[spin]") {
  CHECK_THROWS_AS(OccupationVector({1, -1, 0}), DomainError);
  const OccupationVector v{3, 1, 0, 1, 0};
  CHECK(v.total() == 5);
  CHECK(v.twice_magnetization(SpinSpecies(4)) == 3 * 4 + 2 - 2);
}

TEST_CASE("sector checks reject bad N and M", "[basis]") {
  CHECK_THROWS_AS(enumerate_basis(SpinSpecies(4), 5, M(99)), DomainError);
  CHECK_THROWS_AS(enumerate_basis(SpinSpecies(2), 0, M(0)), DomainError);
  // J = 9/2 for three spin-3/2 particles: integral M has the wrong parity.
  CHECK_THROWS_AS(enumerate_basis(SpinSpecies(3), 3, M(1)), DomainError);
  CHECK_NOTHROW(enumerate_basis(SpinSpecies(3), 3, Magnetization::parse("7/2")));
}

TEST_CASE("basis sizes", "[basis]") {
  SECTION("spin 1, N = 10") {
    CHECK(enumerate_basis(SpinSpecies(2), 10, M(0)).size() == 6);
    CHECK(enumerate_basis(SpinSpecies(2), 10, M(4)).size() == 4);
    CHECK(enumerate_basis(SpinSpecies(2), 10, M(10)).size() == 1);
  }
  SECTION("spin 3/2, N = 6") {
    const std::vector<std::size_t> expected{8, 8, 7, 7, 5, 4, 3, 2, 1, 1};
    for (int m = 0; m <= 9; ++m) CHECK(enumerate_basis(SpinSpecies(3), 6, M(m)).size() == expected[m]);
  }
  SECTION("spin 2, N = 5") {
    const std::vector<std::size_t> expected{12, 11, 11, 9, 8, 6, 5, 3, 2, 1, 1};
    for (int m = 0; m <= 10; ++m) CHECK(enumerate_basis(SpinSpecies(4), 5, M(m)).size() == expected[m]);
  }
  SECTION("spin 1/2 has one vector per sector") {
    for (int n = 1; n <= 12; ++n)
      for (auto m : all_m(SpinSpecies(1), n)) CHECK(enumerate_basis(SpinSpecies(1), n, m).size() == 1);
  }
}

TEST_CASE("spin-3/2 N = 6, M = 0 lists the expected vectors", "[basis]") {
  const std::set<OccupationVector> expected{{0, 3, 3, 0}, {1, 1, 4, 0}, {0, 4, 1, 1}, {1, 2, 2, 1},
                                            {2, 0, 3, 1}, {1, 3, 0, 2}, {2, 1, 1, 2}, {3, 0, 0, 3}};
  const auto basis = enumerate_basis(SpinSpecies(3), 6, M(0));
  CHECK(std::set<OccupationVector>(basis.begin(), basis.end()) == expected);
}

TEST_CASE("every basis vector obeys both conservation laws", "[basis][property]") {
  for (auto species : all_species())
    for (int n = 1; n <= 10; ++n)
      for (auto m : all_m(species, n))
        for (const auto& v : enumerate_basis(species, n, m)) {
          REQUIRE(v.size() == static_cast<std::size_t>(species.levels()));
          REQUIRE(v.total() == n);
          REQUIRE(v.twice_magnetization(species) == m.twice());
        }
}

TEST_CASE("enumeration is complete against brute force", "[basis][property]") {
  // Independent count: all compositions of N into 2s+1 parts, bucketed by 2M.
  for (auto species : all_species()) {
    for (int n = 1; n <= 6; ++n) {
      std::map<int, std::size_t> buckets;
      std::vector<int> c(species.levels(), 0);
      std::function<void(int, int)> rec = [&](int level, int left) {
        if (level == species.levels() - 1) {
          c[level] = left;
          ++buckets[OccupationVector(c).twice_magnetization(species)];
          return;
        }
        for (int k = 0; k <= left; ++k) {
          c[level] = k;
          rec(level + 1, left - k);
        }
      };
      rec(0, n);
      for (auto m : all_m(species, n)) CHECK(enumerate_basis(species, n, m).size() == buckets[m.twice()]);
    }
  }
}

TEST_CASE("negating M mirrors the basis", "[basis][property]") {
  for (auto species : all_species())
    for (int n = 1; n <= 10; ++n)
      for (auto m : all_m(species, n)) {
        std::set<OccupationVector> a, b;
        for (const auto& v : enumerate_basis(species, n, m)) a.insert(mirror(v));
        for (const auto& v : enumerate_basis(species, n, -m)) b.insert(v);
        REQUIRE(a == b);
      }
}

TEST_CASE("canonical order is strictly descending and deterministic", "[basis][property]") {
  for (auto species : all_species())
    for (int n = 1; n <= 8; ++n)
      for (auto m : all_m(species, n)) {
        const auto basis = enumerate_basis(species, n, m);
        for (std::size_t i = 1; i < basis.size(); ++i) REQUIRE(CanonicalOrder{}(basis[i - 1], basis[i]));
        REQUIRE(basis == enumerate_basis(species, n, m));
      }
}

TEST_CASE("printed bound parameters", "[basis][bounds]") {
  SECTION("spin 1, N = 10, M = 0") {
    const auto p = enumeration_bounds(SpinSpecies(2), 10, M(0));
    CHECK(p.parity_min == 0);
    CHECK(p.k_max == 5);
    CHECK(basis_count_formula(SpinSpecies(2), 10, M(0)) == 6);
  }
  SECTION("spin 3/2, N = 6, M = 0") {
    const auto p = enumeration_bounds(SpinSpecies(3), 6, M(0));
    REQUIRE(p.alpha);
    CHECK(*p.alpha == 3);
    CHECK(p.k0 == 2);
    CHECK(p.sign_factor == 1);
  }
  SECTION("spin 2, N = 5, M = 9") {
    const auto p = enumeration_bounds(SpinSpecies(4), 5, M(9));
    REQUIRE(p.alpha);
    CHECK(*p.alpha == -4);
    CHECK(p.k0 == 0);
    CHECK(p.k_max == 0);
  }
  SECTION("negative M flips the sign factor") {
    CHECK(enumeration_bounds(SpinSpecies(3), 6, M(-2)).sign_factor == -1);
    CHECK(enumeration_bounds(SpinSpecies(3), 6, M(2)).sign_factor == 1);
  }
}

TEST_CASE("count formula for spin 1 matches the basis", "[basis][bounds][property]") {
  CHECK(basis_count_formula(SpinSpecies(2), 10, M(4)) == 4);
  for (int n = 1; n <= 12; ++n) {
    CHECK(basis_count_formula(SpinSpecies(2), n, M(n)) == 1);
    for (auto m : all_m(SpinSpecies(2), n)) {
      const auto p = enumeration_bounds(SpinSpecies(2), n, m);
      REQUIRE(static_cast<std::size_t>(p.k_max + 1) == enumerate_basis(SpinSpecies(2), n, m).size());
    }
  }
}

TEST_CASE("spin-3/2 parametrized count disagrees at N = 6, M = 0", "[basis][bounds]") {
  // The printed construction sums m_k to 14 here while the sector has 8
  // vectors; the discrepancy is reported, not patched.
  const auto r = parametrization_report(SpinSpecies(3), 6, M(0));
  CHECK(r.basis_size == 8);
  CHECK(r.count_formula == 14);
  CHECK_FALSE(r.count_matches());
}

TEST_CASE("parametrization report is self-consistent", "[basis][bounds]") {
  for (auto species : all_species())
    for (int n = 1; n <= 6; ++n)
      for (auto m : all_m(species, n)) {
        const auto r = parametrization_report(species, n, m);
        REQUIRE(r.basis_size == enumerate_basis(species, n, m).size());
        REQUIRE(r.valid_distinct + r.missing.size() == r.basis_size);
        REQUIRE(r.reproduces_basis() == r.missing.empty());
      }
}
