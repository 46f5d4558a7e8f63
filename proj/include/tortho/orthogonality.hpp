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

#ifndef TORTHO_ORTHOGONALITY_HPP_
#define TORTHO_ORTHOGONALITY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tortho/latin_square.hpp"

namespace tortho {

// 1-based grid coordinate.
struct Cell {
  int row = 1;
  int column = 1;

  auto operator<=>(const Cell&) const = default;
};

// The n x n grid of t-tuples obtained by stacking t squares. Entry c of the
// tuple at (i, j) is square c's symbol at (i, j).
class TupleArray {
 public:
  int order() const { return order_; }
  int arity() const { return arity_; }
  // Indices (0-based) of the superimposed squares within their source list.
  const std::vector<std::size_t>& source() const { return source_; }

  std::span<const int> tuple(int row, int column) const {
    return {entries_.data() + offset(row, column),
            static_cast<std::size_t>(arity_)};
  }
  std::span<const int> tuple(Cell cell) const {
    return tuple(cell.row, cell.column);
  }

 private:
  friend TupleArray superimpose(std::span<const LatinSquare>,
                                std::vector<std::size_t>);

  std::size_t offset(int row, int column) const {
    return static_cast<std::size_t>(((row - 1) * order_ + (column - 1)) *
                                    arity_);
  }

  int order_ = 0;
  int arity_ = 0;
  std::vector<std::size_t> source_;
  std::vector<int> entries_;
};

// Stacks the squares in the given order. Requires at least two squares of a
// common order. `source` records where they came from; when empty it
// defaults to 0..t-1.
TupleArray superimpose(std::span<const LatinSquare> squares,
                       std::vector<std::size_t> source = {});

// Stacks set[indices[0]], set[indices[1]], ... and records the indices.
TupleArray superimpose(const MolsSet& set,
                       std::span<const std::size_t> indices);

struct OrthogonalityReport {
  bool is_orthogonal = false;
  std::size_t distinct_count = 0;
  // Lexicographically smallest (first, second) pair of cells, in row-major
  // order, that carry the same tuple.
  std::optional<std::pair<Cell, Cell>> first_collision;
};

OrthogonalityReport is_t_orthogonal(const TupleArray& array);

std::size_t distinct_tuple_count(const TupleArray& array);

struct SubsetVerdict {
  std::vector<std::size_t> subset;  // 0-based, increasing
  OrthogonalityReport report;
};

struct SetOrthogonalityReport {
  int t = 0;
  bool all_orthogonal = true;
  std::vector<SubsetVerdict> subsets;  // lexicographic subset order
};

// Checks every t-element subset of the set. Requires 2 <= t <= set.size().
SetOrthogonalityReport verify_set_orthogonality(const MolsSet& set, int t);

}  // namespace tortho

#endif  // TORTHO_ORTHOGONALITY_HPP_
