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

#include "tortho/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "tortho/error.hpp"

namespace tortho::oracle {

namespace {

bool same_tuple(const TupleArray& array, int r1, int c1, int r2, int c2) {
  for (int k = 0; k < array.arity(); ++k) {
    if (array.tuple(r1, c1)[static_cast<std::size_t>(k)] !=
        array.tuple(r2, c2)[static_cast<std::size_t>(k)]) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool brute_force_distinctness(const TupleArray& array) {
  const int n = array.order();
  const int cells = n * n;
  for (int a = 0; a < cells; ++a) {
    for (int b = a + 1; b < cells; ++b) {
      if (same_tuple(array, a / n + 1, a % n + 1, b / n + 1, b % n + 1)) {
        return false;
      }
    }
  }
  return true;
}

int brute_force_max_multiplicity(const TupleArray& array) {
  const int n = array.order();
  const int cells = n * n;
  int best = 0;
  for (int c = 0; c + 1 < array.arity(); ++c) {
    const auto first = static_cast<std::size_t>(c);
    for (int a = 0; a < cells; ++a) {
      const auto ta = array.tuple(a / n + 1, a % n + 1);
      int count = 0;
      for (int b = 0; b < cells; ++b) {
        const auto tb = array.tuple(b / n + 1, b % n + 1);
        if (ta[first] == tb[first] && ta[first + 1] == tb[first + 1]) ++count;
      }
      best = std::max(best, count);
    }
  }
  return best;
}

std::int64_t count_edges_brute(const PartiteGraph& graph) {
  if (graph.kind() != GraphKind::kCompleteMultipartite) {
    throw DomainError("brute edge count needs a complete multipartite graph");
  }
  const auto total = static_cast<std::size_t>(graph.vertex_count());
  std::int64_t count = 0;
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = a + 1; b < total; ++b) {
      if (graph.vertex_at(a).part != graph.vertex_at(b).part) ++count;
    }
  }
  return count;
}

std::vector<LatinSquare> enumerate_latin_squares(int order) {
  if (order < 1 || order > kMaxSearchOrder) {
    throw DomainError("exhaustive enumeration supports orders 1.." +
                      std::to_string(kMaxSearchOrder));
  }
  const auto n = static_cast<std::size_t>(order);
  SymbolGrid grid(n, std::vector<int>(n, 0));
  std::vector<LatinSquare> out;

  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == n * n) {
      out.push_back(LatinSquare::from_rows(grid));
      return;
    }
    const std::size_t i = cell / n;
    const std::size_t j = cell % n;
    for (int symbol = 1; symbol <= order; ++symbol) {
      bool clash = false;
      for (std::size_t k = 0; k < j && !clash; ++k) clash = grid[i][k] == symbol;
      for (std::size_t k = 0; k < i && !clash; ++k) clash = grid[k][j] == symbol;
      if (clash) continue;
      grid[i][j] = symbol;
      fill(cell + 1);
      grid[i][j] = 0;
    }
  };
  fill(0);
  return out;
}

namespace {

// Every t-subset of `chosen` that contains its last element is t-orthogonal.
// Tuples are compared pairwise, cell against cell.
bool newest_subsets_ok(const std::vector<const LatinSquare*>& chosen, int t) {
  const int size = static_cast<int>(chosen.size());
  if (size < t) return true;
  const int n = chosen.front()->order();

  std::vector<int> pick(static_cast<std::size_t>(t - 1));
  std::function<bool(int, int)> choose = [&](int from, int depth) -> bool {
    if (depth == t - 1) {
      for (int a = 0; a < n * n; ++a) {
        for (int b = a + 1; b < n * n; ++b) {
          auto same = [&](const LatinSquare* s) {
            return s->at(a / n + 1, a % n + 1) == s->at(b / n + 1, b % n + 1);
          };
          bool equal = same(chosen.back());
          for (int k = 0; k < t - 1 && equal; ++k) {
            equal = same(chosen[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])]);
          }
          if (equal) return false;
        }
      }
      return true;
    }
    for (int s = from; s < size - 1; ++s) {
      pick[static_cast<std::size_t>(depth)] = s;
      if (!choose(s + 1, depth + 1)) return false;
    }
    return true;
  };
  return choose(0, 0);
}

}  // namespace

SearchResult exhaustive_mols_search(int order, int count, int t,
                                    std::optional<std::uint64_t> shuffle_seed) {
  if (order > kMaxSearchOrder) {
    throw DomainError("exhaustive search is limited to order <= " +
                      std::to_string(kMaxSearchOrder));
  }
  if (t < 2 || t > count) {
    throw DomainError("search needs 2 <= t <= count");
  }
  std::vector<LatinSquare> candidates = enumerate_latin_squares(order);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }

  std::vector<const LatinSquare*> chosen;
  std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == count) return true;
    for (std::size_t k = from; k < candidates.size(); ++k) {
      chosen.push_back(&candidates[k]);
      if (newest_subsets_ok(chosen, t) && extend(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  SearchResult result;
  result.found = extend(0);
  if (result.found) {
    for (const LatinSquare* square : chosen) result.witness.push_back(*square);
  }
  return result;
}

}  // namespace tortho::oracle
