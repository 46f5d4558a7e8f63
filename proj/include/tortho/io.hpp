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

#ifndef TORTHO_IO_HPP_
#define TORTHO_IO_HPP_

#include <string>
#include <string_view>

#include "tortho/latin_square.hpp"
#include "tortho/partite_graph.hpp"

namespace tortho {

// Square file layout:
//
//   <n> <m>
//   m blocks of n lines, n space-separated symbols per line
//   one blank line between blocks
//
// ASCII, '\n' line endings, trailing newline after the last row.
std::string serialize_square_file(const MolsSet& set);

// Throws ParseError with line/column for syntax and range problems, and
// DomainError naming the 1-based block for Latin violations.
MolsSet parse_square_file(std::string_view text);

enum class ExportFormat { kDot, kEdgeList, kJson };

// Accepts "dot", "edges" (or "edge-list") and "json".
ExportFormat parse_export_format(std::string_view name);

// Output is a pure function of the graph: vertices by part then index,
// edges in PartiteGraph::edges() order, parallel edges repeated.
std::string export_graph(const PartiteGraph& graph, ExportFormat format);

}  // namespace tortho

#endif  // TORTHO_IO_HPP_
