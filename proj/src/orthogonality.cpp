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

#include "tortho/orthogonality.hpp"

#include <algorithm>
#include <numeric>

#include "tortho/error.hpp"

namespace tortho {

TupleArray superimpose(std::span<const LatinSquare> squares,
                       std::vector<std::size_t> source) {
  if (squares.size() < 2) {
    throw DomainError("superimposition needs at least two squares");
  }
  const int n = squares.front().order();
  for (const auto& square : squares) {
    if (square.order() != n) {
      throw DomainError("cannot superimpose squares of mixed order");
    }
  }
  if (source.empty()) {
    source.resize(squares.size());
    std::iota(source.begin(), source.end(), std::size_t{0});
  } else if (source.size() != squares.size()) {
    throw DomainError("source index list does not match square count");
  }

  TupleArray array;
  array.order_ = n;
  array.arity_ = static_cast<int>(squares.size());
  array.source_ = std::move(source);
  array.entries_.reserve(static_cast<std::size_t>(n * n) * squares.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (const auto& square : squares) {
        array.entries_.push_back(square.at(i, j));
      }
    }
  }
  return array;
}

TupleArray superimpose(const MolsSet& set,
                       std::span<const std::size_t> indices) {
  std::vector<LatinSquare> chosen;
  chosen.reserve(indices.size());
  for (const std::size_t index : indices) {
    if (index >= set.size()) {
      throw DomainError("square index " + std::to_string(index + 1) +
                        " outside 1.." + std::to_string(set.size()));
    }
    chosen.push_back(set[index]);
  }
  return superimpose(chosen, {indices.begin(), indices.end()});
}

namespace {

Cell cell_of(std::size_t flat, int n) {
  const int k = static_cast<int>(flat);
  return {k / n + 1, k % n + 1};
}

}  // namespace

OrthogonalityReport is_t_orthogonal(const TupleArray& array) {
  const int n = array.order();
  const std::size_t cells = static_cast<std::size_t>(n) * n;

  auto tuple_at = [&](std::size_t flat) {
    const Cell c = cell_of(flat, n);
    return array.tuple(c.row, c.column);
  };

  // Cell indices sorted by tuple; ties keep row-major order so each run of
  // equal tuples lists its cells in increasing order.
  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const auto ta = tuple_at(a);
                     const auto tb = tuple_at(b);
                     return std::lexicographical_compare(ta.begin(), ta.end(),
                                                         tb.begin(), tb.end());
                   });

  OrthogonalityReport report;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t k = 0; k < cells; ++k) {
    const bool starts_run =
        k == 0 || !std::ranges::equal(tuple_at(order[k - 1]), tuple_at(order[k]));
    if (starts_run) {
      ++report.distinct_count;
      continue;
    }
    // Second member of a run: paired with the run's first cell.
    if (k == 1 || !std::ranges::equal(tuple_at(order[k - 2]),
                                   tuple_at(order[k]))) {
      const std::pair candidate{order[k - 1], order[k]};
      if (!best || candidate < *best) best = candidate;
    }
  }
  report.is_orthogonal = report.distinct_count == cells;
  if (best) {
    report.first_collision =
        std::pair{cell_of(best->first, n), cell_of(best->second, n)};
  }
  return report;
}

std::size_t distinct_tuple_count(const TupleArray& array) {
  return is_t_orthogonal(array).distinct_count;
}

SetOrthogonalityReport verify_set_orthogonality(const MolsSet& set, int t) {
  if (t < 2 || static_cast<std::size_t>(t) > set.size()) {
    throw DomainError("t=" + std::to_string(t) + " outside 2.." +
                      std::to_string(set.size()));
  }
  SetOrthogonalityReport result;
  result.t = t;

  const std::size_t m = set.size();
  std::vector<std::size_t> subset(static_cast<std::size_t>(t));
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  while (true) {
    SubsetVerdict verdict{subset, is_t_orthogonal(superimpose(set, subset))};
    result.all_orthogonal = result.all_orthogonal && verdict.report.is_orthogonal;
    result.subsets.push_back(std::move(verdict));

    // Next combination in lexicographic order.
    int pos = t - 1;
    while (pos >= 0 &&
           subset[static_cast<std::size_t>(pos)] ==
               m - static_cast<std::size_t>(t - pos)) {
      --pos;
    }
    if (pos < 0) break;
    ++subset[static_cast<std::size_t>(pos)];
    for (auto k = static_cast<std::size_t>(pos) + 1; k < subset.size(); ++k) {
      subset[k] = subset[k - 1] + 1;
    }
  }
  return result;
}

}  // namespace tortho
