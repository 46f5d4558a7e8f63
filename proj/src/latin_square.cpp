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

#include <algorithm>
#include <sstream>

#include "tortho/error.hpp"

namespace tortho {

bool is_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; d <= value / d; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::string to_string(const Provenance& provenance) {
  switch (provenance.kind) {
    case Provenance::Kind::kMultiplicative:
      return "multiplicative";
    case Provenance::Kind::kAdditive:
      return "additive(h=" + std::to_string(provenance.parameter) + ")";
    case Provenance::Kind::kShifted:
      return "shifted(k=" + std::to_string(provenance.parameter) + ")";
    case Provenance::Kind::kExternal:
      break;
  }
  return "external";
}

std::string to_string(const LatinViolation& violation) {
  std::ostringstream os;
  switch (violation.axis) {
    case LatinViolation::Axis::kRow:
      os << "row " << violation.index;
      break;
    case LatinViolation::Axis::kColumn:
      os << "column " << violation.index;
      break;
    case LatinViolation::Axis::kShape:
      os << "row " << violation.index << " has " << violation.symbol
         << " entries";
      return os.str();
  }
  switch (violation.problem) {
    case LatinViolation::Problem::kDuplicate:
      os << " duplicates symbol " << violation.symbol;
      break;
    case LatinViolation::Problem::kMissing:
      os << " is missing symbol " << violation.symbol;
      break;
    case LatinViolation::Problem::kOutOfRange:
      os << " contains out-of-range symbol " << violation.symbol;
      break;
    case LatinViolation::Problem::kBadLength:
      break;
  }
  return os.str();
}

namespace {

using Axis = LatinViolation::Axis;
using Problem = LatinViolation::Problem;

// Appends duplicate, missing and out-of-range findings for one line.
template <typename Get>
void check_line(int n, Axis axis, int index, Get get,
                std::vector<LatinViolation>& out) {
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    const int symbol = get(k);
    if (symbol < 1 || symbol > n) {
      out.push_back({axis, index, Problem::kOutOfRange, symbol});
      continue;
    }
    if (++seen[static_cast<std::size_t>(symbol)] == 2) {
      out.push_back({axis, index, Problem::kDuplicate, symbol});
    }
  }
  for (int symbol = 1; symbol <= n; ++symbol) {
    if (seen[static_cast<std::size_t>(symbol)] == 0) {
      out.push_back({axis, index, Problem::kMissing, symbol});
    }
  }
}

}  // namespace

LatinReport validate_latin(const SymbolGrid& rows) {
  LatinReport report;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    const int length = static_cast<int>(rows[static_cast<std::size_t>(i)].size());
    if (length != n) {
      report.violations.push_back({Axis::kShape, i + 1, Problem::kBadLength, length});
    }
  }
  if (!report.ok()) return report;

  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    check_line(n, Axis::kRow, i + 1,
               [&](int k) { return row[static_cast<std::size_t>(k)]; },
               report.violations);
  }
  for (int j = 0; j < n; ++j) {
    check_line(n, Axis::kColumn, j + 1,
               [&](int k) {
                 return rows[static_cast<std::size_t>(k)]
                            [static_cast<std::size_t>(j)];
               },
               report.violations);
  }
  return report;
}

LatinReport validate_latin(const LatinSquare& square) {
  return validate_latin(square.rows());
}

LatinSquare LatinSquare::from_rows(const SymbolGrid& rows,
                                   Provenance provenance) {
  if (rows.empty()) throw DomainError("Latin square must have order >= 1");
  const LatinReport report = validate_latin(rows);
  if (!report.ok()) {
    throw DomainError("not a Latin square: " +
                      to_string(report.violations.front()));
  }
  const int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n * n));
  for (const auto& row : rows) cells.insert(cells.end(), row.begin(), row.end());
  return LatinSquare(n, std::move(cells), provenance);
}

SymbolGrid LatinSquare::rows() const {
  SymbolGrid out;
  out.reserve(static_cast<std::size_t>(order_));
  for (int i = 1; i <= order_; ++i) {
    const auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

LatinSquare make_multiplicative_square(int order) {
  if (order < 2) throw DomainError("multiplicative square needs order >= 2");
  if (!is_prime(order + 1)) {
    throw DomainError("construction precondition violated: " +
                      std::to_string(order + 1) + " is not prime");
  }
  const int modulus = order + 1;
  SymbolGrid rows(static_cast<std::size_t>(order));
  for (int i = 1; i <= order; ++i) {
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= order; ++j) row.push_back((i * j) % modulus);
  }
  return LatinSquare::from_rows(rows,
                                {Provenance::Kind::kMultiplicative, 0});
}

LatinSquare apply_row_shift(const LatinSquare& square, int shift) {
  const int n = square.order();
  if (shift < 0 || shift >= n) {
    throw DomainError("row shift " + std::to_string(shift) +
                      " outside 0.." + std::to_string(n - 1));
  }
  std::vector<int> cells;
  cells.reserve(square.cells_.size());
  for (int i = 0; i < n; ++i) {
    const auto source = square.row((i + shift) % n + 1);
    cells.insert(cells.end(), source.begin(), source.end());
  }
  return LatinSquare(n, std::move(cells), {Provenance::Kind::kShifted, shift});
}

LatinSquare make_additive_square(int order, int multiplier) {
  if (!is_prime(order)) {
    throw DomainError("construction precondition violated: " +
                      std::to_string(order) + " is not prime");
  }
  if (multiplier < 1 || multiplier > order - 1) {
    throw DomainError("multiplier h=" + std::to_string(multiplier) +
                      " outside 1.." + std::to_string(order - 1));
  }
  SymbolGrid rows(static_cast<std::size_t>(order));
  for (int i = 1; i <= order; ++i) {
    auto& row = rows[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= order; ++j) {
      row.push_back((i + multiplier * j - 1) % order + 1);
    }
  }
  return LatinSquare::from_rows(rows,
                                {Provenance::Kind::kAdditive, multiplier});
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kAdditivePrime:
      return "additive-prime";
    case FamilyKind::kShiftFamily:
      return "shift-family";
    case FamilyKind::kExternal:
      break;
  }
  return "external";
}

MolsSet::MolsSet(std::vector<LatinSquare> squares, FamilyKind kind)
    : order_(0), squares_(std::move(squares)), kind_(kind) {
  if (squares_.empty()) throw DomainError("square set is empty");
  order_ = squares_.front().order();
  for (const auto& square : squares_) {
    if (square.order() != order_) {
      throw DomainError("squares of mixed order in one set");
    }
  }
  if (kind_ == FamilyKind::kExternal) return;
  for (std::size_t a = 0; a < squares_.size(); ++a) {
    for (std::size_t b = a + 1; b < squares_.size(); ++b) {
      if (squares_[a] == squares_[b]) {
        throw DomainError("constructed family repeats square " +
                          std::to_string(a + 1));
      }
    }
  }
}

MolsSet make_mols_family(int order, FamilyMethod method) {
  const bool prime = is_prime(order);
  const bool next_prime = order >= 2 && is_prime(order + 1);
  if (method == FamilyMethod::kAuto) {
    if (prime) {
      method = FamilyMethod::kAdditive;
    } else if (next_prime) {
      method = FamilyMethod::kShift;
    } else {
      throw DomainError("no construction available for order " +
                        std::to_string(order) +
                        ": neither n nor n+1 is prime");
    }
  }

  std::vector<LatinSquare> squares;
  if (method == FamilyMethod::kAdditive) {
    if (!prime) {
      throw DomainError("additive family needs prime order, got " +
                        std::to_string(order));
    }
    for (int h = 1; h <= order - 1; ++h) {
      squares.push_back(make_additive_square(order, h));
    }
    return MolsSet(std::move(squares), FamilyKind::kAdditivePrime);
  }

  if (!next_prime) {
    throw DomainError("shift family needs n+1 prime, got n=" +
                      std::to_string(order));
  }
  const LatinSquare base = make_multiplicative_square(order);
  for (int k = 0; k < order; ++k) squares.push_back(apply_row_shift(base, k));
  return MolsSet(std::move(squares), FamilyKind::kShiftFamily);
}

}  // namespace tortho
