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

#ifndef TORTHO_LATIN_SQUARE_HPP_
#define TORTHO_LATIN_SQUARE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tortho {

bool is_prime(int value);

// How a square came to be. `parameter` is h for additive squares and the
// shift amount k for shifted squares; unused otherwise.
struct Provenance {
  enum class Kind { kMultiplicative, kAdditive, kShifted, kExternal };
  Kind kind = Kind::kExternal;
  int parameter = 0;

  bool operator==(const Provenance&) const = default;
};

std::string to_string(const Provenance& provenance);

using SymbolGrid = std::vector<std::vector<int>>;

struct LatinViolation {
  enum class Axis { kRow, kColumn, kShape };
  enum class Problem { kDuplicate, kMissing, kOutOfRange, kBadLength };
  Axis axis;
  int index;   // 1-based row or column
  Problem problem;
  int symbol;  // offending symbol; row length for kBadLength

  bool operator==(const LatinViolation&) const = default;
};

std::string to_string(const LatinViolation& violation);

struct LatinReport {
  std::vector<LatinViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks an arbitrary grid: it must be n x n with every row and column a
// permutation of 1..n. Violations are listed rows first, then columns.
LatinReport validate_latin(const SymbolGrid& rows);

// An n x n Latin square over symbols 1..n. Instances always satisfy the
// Latin property; from_rows() rejects anything else.
class LatinSquare {
 public:
  static LatinSquare from_rows(const SymbolGrid& rows,
                               Provenance provenance = {});

  int order() const { return order_; }
  const Provenance& provenance() const { return provenance_; }

  // 1-based cell access.
  int at(int row, int column) const {
    return cells_[static_cast<std::size_t>((row - 1) * order_ + (column - 1))];
  }
  std::span<const int> row(int row) const {
    return {cells_.data() + static_cast<std::size_t>((row - 1) * order_),
            static_cast<std::size_t>(order_)};
  }
  SymbolGrid rows() const;

  // Squares compare by content; provenance is metadata.
  bool operator==(const LatinSquare& other) const {
    return order_ == other.order_ && cells_ == other.cells_;
  }

 private:
  LatinSquare(int order, std::vector<int> cells, Provenance provenance)
      : order_(order), cells_(std::move(cells)), provenance_(provenance) {}

  friend LatinSquare apply_row_shift(const LatinSquare&, int);

  int order_;
  std::vector<int> cells_;
  Provenance provenance_;
};

LatinReport validate_latin(const LatinSquare& square);

// cells[i][j] = (i*j) mod (n+1) for i, j in 1..n. Requires n >= 2 and n+1
// prime.
LatinSquare make_multiplicative_square(int order);

// Row i of the result is row ((i-1+k) mod n)+1 of the input, so k = 1 moves
// every row up by one. Requires 0 <= k < order.
LatinSquare apply_row_shift(const LatinSquare& square, int shift);

// cells[i][j] = ((i + h*j - 1) mod n) + 1: residue 0 is written as symbol n.
// Requires n prime and 1 <= h <= n-1.
LatinSquare make_additive_square(int order, int multiplier);

enum class FamilyKind { kAdditivePrime, kShiftFamily, kExternal };
std::string to_string(FamilyKind kind);

// An ordered family of same-order Latin squares.
//
// Constructed families never repeat a square. External families (read from
// files) may, so that verification can point at the colliding cells instead
// of failing to load.
class MolsSet {
 public:
  MolsSet(std::vector<LatinSquare> squares, FamilyKind kind);

  int order() const { return order_; }
  std::size_t size() const { return squares_.size(); }
  FamilyKind kind() const { return kind_; }
  const std::vector<LatinSquare>& squares() const { return squares_; }
  const LatinSquare& operator[](std::size_t index) const {
    return squares_[index];
  }

  bool operator==(const MolsSet& other) const {
    return squares_ == other.squares_;
  }

 private:
  int order_;
  std::vector<LatinSquare> squares_;
  FamilyKind kind_;
};

enum class FamilyMethod { kAuto, kAdditive, kShift };

// kAuto picks the additive family when n is prime (this includes n = 2,
// where n+1 is prime too) and the row-shift family when only n+1 is prime.
//   additive: make_additive_square(n, h) for h = 1..n-1
//   shift:    apply_row_shift(make_multiplicative_square(n), k), k = 0..n-1
MolsSet make_mols_family(int order, FamilyMethod method = FamilyMethod::kAuto);

}  // namespace tortho

#endif  // TORTHO_LATIN_SQUARE_HPP_
