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

#ifndef TORTHO_ORACLE_HPP_
#define TORTHO_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "tortho/latin_square.hpp"
#include "tortho/orthogonality.hpp"
#include "tortho/partite_graph.hpp"

// Deliberately naive re-implementations used to cross-check the main
// modules. Nothing in here may call into the orthogonality or multiplicity
// code it is checking.
namespace tortho::oracle {

// Compares every pair of cells element by element.
bool brute_force_distinctness(const TupleArray& array);

// Largest number of cells that share the same consecutive-coordinate pair
// (a_c, a_{c+1}) for some c, found by pairwise cell comparison. Equals the
// max edge multiplicity of the chain graph built from the array.
int brute_force_max_multiplicity(const TupleArray& array);

// Counts vertex pairs lying in different parts with a double loop over all
// vertices. Requires a complete multipartite graph.
std::int64_t count_edges_brute(const PartiteGraph& graph);

// All Latin squares of order n (n <= 4) in lexicographic row-major order.
std::vector<LatinSquare> enumerate_latin_squares(int order);

struct SearchResult {
  bool found = false;
  std::vector<LatinSquare> witness;
};

inline constexpr int kMaxSearchOrder = 4;

// Looks for `count` distinct Latin squares of order n whose every t-subset
// is t-orthogonal. With a shuffle seed the candidate list is permuted first;
// the verdict must not depend on it.
SearchResult exhaustive_mols_search(
    int order, int count, int t,
    std::optional<std::uint64_t> shuffle_seed = std::nullopt);

}  // namespace tortho::oracle

#endif  // TORTHO_ORACLE_HPP_
