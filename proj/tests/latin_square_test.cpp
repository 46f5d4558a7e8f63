// Copyright 2026 The tortho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tortho/latin_square.hpp"

#include <random>

#include "doctest.h"
#include "tortho/error.hpp"

using namespace tortho;

namespace {

const SymbolGrid kExample31Base = {
    {1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}};

}  // namespace

TEST_CASE("is_prime by trial division") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("multiplicative square") {
  SUBCASE("order 4 matches the displayed base square") {
    const LatinSquare square = make_multiplicative_square(4);
    CHECK(square.rows() == kExample31Base);
    CHECK(square.provenance().kind == Provenance::Kind::kMultiplicative);
  }
  SUBCASE("order 2") {
    CHECK(make_multiplicative_square(2).rows() == SymbolGrid{{1, 2}, {2, 1}});
  }
  SUBCASE("order 6 is (i*j) mod 7") {
    const SymbolGrid expected = {{1, 2, 3, 4, 5, 6}, {2, 4, 6, 1, 3, 5},
                                 {3, 6, 2, 5, 1, 4}, {4, 1, 5, 2, 6, 3},
                                 {5, 3, 1, 6, 4, 2}, {6, 5, 4, 3, 2, 1}};
    const LatinSquare square = make_multiplicative_square(6);
    CHECK(square.rows() == expected);
    CHECK(validate_latin(square).ok());
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(make_multiplicative_square(5), DomainError);  // 6 composite
    CHECK_THROWS_AS(make_multiplicative_square(1), DomainError);
    CHECK_THROWS_WITH(make_multiplicative_square(7),
                      doctest::Contains("construction precondition violated"));
  }
  SUBCASE("every n with n+1 prime yields a Latin square") {
    for (int n = 2; n <= 60; ++n) {
      if (!is_prime(n + 1)) continue;
      CAPTURE(n);
      CHECK(validate_latin(make_multiplicative_square(n)).ok());
    }
  }
}

TEST_CASE("row shift") {
  const LatinSquare base = LatinSquare::from_rows(kExample31Base);

  CHECK(apply_row_shift(base, 1).rows() ==
        SymbolGrid{{2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}, {1, 2, 3, 4}});
  CHECK(apply_row_shift(base, 3).rows() ==
        SymbolGrid{{4, 3, 2, 1}, {1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}});
  CHECK(apply_row_shift(base, 0) == base);
  CHECK(apply_row_shift(base, 2).provenance() ==
        Provenance{Provenance::Kind::kShifted, 2});

  CHECK_THROWS_AS(apply_row_shift(base, 4), DomainError);
  CHECK_THROWS_AS(apply_row_shift(base, -1), DomainError);
}

TEST_CASE("row shifts compose additively and keep the Latin property") {
  std::mt19937 rng(20261016);
  for (int n : {4, 6, 10, 12}) {
    const LatinSquare base = make_multiplicative_square(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const int k1 = pick(rng);
      const int k2 = pick(rng);
      const LatinSquare twice = apply_row_shift(apply_row_shift(base, k1), k2);
      CHECK(twice == apply_row_shift(base, (k1 + k2) % n));
      CHECK(validate_latin(twice).ok());
    }
  }
}

TEST_CASE("additive square") {
  CHECK(make_additive_square(5, 1).rows() ==
        SymbolGrid{{2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3},
                   {5, 1, 2, 3, 4}, {1, 2, 3, 4, 5}});
  const auto h2 = make_additive_square(5, 2);
  CHECK(std::vector<int>(h2.row(1).begin(), h2.row(1).end()) ==
        std::vector<int>{3, 5, 2, 4, 1});
  CHECK(make_additive_square(3, 1).rows() ==
        SymbolGrid{{2, 3, 1}, {3, 1, 2}, {1, 2, 3}});

  for (int h = 1; h <= 6; ++h) CHECK(validate_latin(make_additive_square(7, h)).ok());

  CHECK_THROWS_AS(make_additive_square(6, 1), DomainError);
  CHECK_THROWS_AS(make_additive_square(5, 0), DomainError);
  CHECK_THROWS_AS(make_additive_square(5, 5), DomainError);
}

TEST_CASE("additive squares over many primes never use symbol 0") {
  for (int p = 2; p <= 47; ++p) {
    if (!is_prime(p)) continue;
    for (int h = 1; h < p; ++h) {
      const LatinSquare square = make_additive_square(p, h);
      CHECK(validate_latin(square).ok());
    }
  }
}

TEST_CASE("validate_latin reports violations") {
  CHECK(validate_latin(kExample31Base).ok());

  const LatinReport bad = validate_latin(SymbolGrid{{1, 2}, {1, 2}});
  REQUIRE_FALSE(bad.ok());
  const LatinViolation column_dup{LatinViolation::Axis::kColumn, 1,
                                  LatinViolation::Problem::kDuplicate, 1};
  CHECK(std::find(bad.violations.begin(), bad.violations.end(), column_dup) !=
        bad.violations.end());
  CHECK(to_string(column_dup) == "column 1 duplicates symbol 1");

  const LatinReport ragged = validate_latin(SymbolGrid{{1, 2}, {2}});
  REQUIRE_FALSE(ragged.ok());
  CHECK(ragged.violations.front().axis == LatinViolation::Axis::kShape);

  const LatinReport range = validate_latin(SymbolGrid{{1, 3}, {2, 1}});
  CHECK_FALSE(range.ok());

  CHECK_THROWS_AS(LatinSquare::from_rows({{1, 2}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(LatinSquare::from_rows({}), DomainError);
}

TEST_CASE("family construction") {
  SUBCASE("order 4 uses the shift family") {
    const MolsSet set = make_mols_family(4);
    REQUIRE(set.size() == 4);
    CHECK(set.kind() == FamilyKind::kShiftFamily);
    const LatinSquare base = make_multiplicative_square(4);
    for (int k = 0; k < 4; ++k) CHECK(set[static_cast<std::size_t>(k)] == apply_row_shift(base, k));
  }
  SUBCASE("order 5 uses the additive family") {
    const MolsSet set = make_mols_family(5);
    REQUIRE(set.size() == 4);
    CHECK(set.kind() == FamilyKind::kAdditivePrime);
    for (int h = 1; h <= 4; ++h) CHECK(set[static_cast<std::size_t>(h - 1)] == make_additive_square(5, h));
  }
  SUBCASE("order 6 has six shift squares") {
    CHECK(make_mols_family(6).size() == 6);
  }
  SUBCASE("order 2 prefers the additive branch; shift is available on request") {
    CHECK(make_mols_family(2).kind() == FamilyKind::kAdditivePrime);
    CHECK(make_mols_family(2).size() == 1);
    CHECK(make_mols_family(2, FamilyMethod::kShift).size() == 2);
  }
  SUBCASE("no construction") {
    CHECK_THROWS_WITH(make_mols_family(14),
                      doctest::Contains("no construction available"));
    CHECK_THROWS_AS(make_mols_family(1), DomainError);
    CHECK_THROWS_AS(make_mols_family(4, FamilyMethod::kAdditive), DomainError);
    CHECK_THROWS_AS(make_mols_family(5, FamilyMethod::kShift), DomainError);
  }
  SUBCASE("members are pairwise distinct") {
    for (int n = 2; n <= 30; ++n) {
      if (!is_prime(n) && !is_prime(n + 1)) continue;
      const MolsSet set = make_mols_family(n);
      for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b) CHECK_FALSE(set[a] == set[b]);
    }
  }
}

TEST_CASE("MolsSet invariants") {
  const LatinSquare a = make_additive_square(3, 1);
  const LatinSquare b = make_additive_square(5, 1);
  CHECK_THROWS_AS(MolsSet({}, FamilyKind::kExternal), DomainError);
  CHECK_THROWS_AS(MolsSet({a, b}, FamilyKind::kExternal), DomainError);
  CHECK_THROWS_AS(MolsSet({a, a}, FamilyKind::kAdditivePrime), DomainError);
  CHECK(MolsSet({a, a}, FamilyKind::kExternal).size() == 2);
}
