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

#ifndef TORTHO_ERROR_HPP_
#define TORTHO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tortho {

// Raised when an input violates an operation's domain: a construction
// precondition, an out-of-range parameter, a non-orthogonal array where one
// is required, and so on. The CLI maps it to exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed square file. Line and column are 1-based; column 0 means the
// error concerns the whole line.
class ParseError : public DomainError {
 public:
  ParseError(int line, int column, const std::string& what)
      : DomainError("line " + std::to_string(line) +
                    (column > 0 ? ", column " + std::to_string(column) : "") +
                    ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tortho

#endif  // TORTHO_ERROR_HPP_
