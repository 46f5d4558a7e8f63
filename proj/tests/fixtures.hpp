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

#ifndef TORTHO_TESTS_FIXTURES_HPP_
#define TORTHO_TESTS_FIXTURES_HPP_

#include <array>
#include <vector>

#include <algorithm>

#include "tortho/latin_square.hpp"
#include "tortho/orthogonality.hpp"

namespace tortho::fixtures {

// Order-4 squares as printed in the worked example: base plus three row
// shifts.
inline const std::vector<SymbolGrid> kOrder4Squares = {
    {{1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}},
    {{2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}, {1, 2, 3, 4}},
    {{3, 1, 4, 2}, {4, 3, 2, 1}, {1, 2, 3, 4}, {2, 4, 1, 3}},
    {{4, 3, 2, 1}, {1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}},
};

// Printed 3-tuple array from the first three order-4 squares.
inline const std::vector<std::vector<std::array<int, 3>>> kOrder4Triples = {
    {{1, 2, 3}, {2, 4, 1}, {3, 1, 4}, {4, 3, 2}},
    {{2, 3, 4}, {4, 1, 3}, {1, 4, 2}, {3, 2, 1}},
    {{3, 4, 1}, {1, 3, 2}, {4, 2, 3}, {2, 1, 4}},
    {{4, 1, 2}, {3, 2, 4}, {2, 3, 1}, {1, 4, 3}},
};

// The four (i + h j) mod 5 squares, h = 1..4.
inline const std::vector<SymbolGrid> kOrder5Squares = {
    {{2, 3, 4, 5, 1}, {3, 4, 5, 1, 2}, {4, 5, 1, 2, 3}, {5, 1, 2, 3, 4}, {1, 2, 3, 4, 5}},
    {{3, 5, 2, 4, 1}, {4, 1, 3, 5, 2}, {5, 2, 4, 1, 3}, {1, 3, 5, 2, 4}, {2, 4, 1, 3, 5}},
    {{4, 2, 5, 3, 1}, {5, 3, 1, 4, 2}, {1, 4, 2, 5, 3}, {2, 5, 3, 1, 4}, {3, 1, 4, 2, 5}},
    {{5, 4, 3, 2, 1}, {1, 5, 4, 3, 2}, {2, 1, 5, 4, 3}, {3, 2, 1, 5, 4}, {4, 3, 2, 1, 5}},
};

// Printed 4-orthogonal array of the order-5 family.
inline const std::vector<std::vector<std::array<int, 4>>> kOrder5Quads = {
    {{2, 3, 4, 5}, {3, 5, 2, 4}, {4, 2, 5, 3}, {5, 4, 3, 2}, {1, 1, 1, 1}},
    {{3, 4, 5, 1}, {4, 1, 3, 5}, {5, 3, 1, 4}, {1, 5, 4, 3}, {2, 2, 2, 2}},
    {{4, 5, 1, 2}, {5, 2, 4, 1}, {1, 4, 2, 5}, {2, 1, 5, 4}, {3, 3, 3, 3}},
    {{5, 1, 2, 3}, {1, 3, 5, 2}, {2, 5, 3, 1}, {3, 2, 1, 5}, {4, 4, 4, 4}},
    {{1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}, {5, 5, 5, 5}},
};

template <typename Grid>
bool array_matches(const TupleArray& array, const Grid& expected) {
  if (array.order() != static_cast<int>(expected.size())) return false;
  for (int i = 1; i <= array.order(); ++i) {
    for (int j = 1; j <= array.order(); ++j) {
      const auto& want = expected[static_cast<std::size_t>(i - 1)]
                                 [static_cast<std::size_t>(j - 1)];
      const auto got = array.tuple(i, j);
      if (got.size() != want.size() ||
          !std::equal(got.begin(), got.end(), want.begin())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace tortho::fixtures

#endif  // TORTHO_TESTS_FIXTURES_HPP_
