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

#include "tortho/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "tortho/error.hpp"

namespace tortho {

std::string serialize_square_file(const MolsSet& set) {
  std::ostringstream os;
  os << set.order() << ' ' << set.size() << '\n';
  for (std::size_t s = 0; s < set.size(); ++s) {
    if (s > 0) os << '\n';
    const LatinSquare& square = set[s];
    for (int i = 1; i <= square.order(); ++i) {
      const auto row = square.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j > 0) os << ' ';
        os << row[j];
      }
      os << '\n';
    }
  }
  return os.str();
}

namespace {

struct Token {
  int value;
  int column;  // 1-based
};

struct Line {
  int number;
  std::string_view text;

  bool blank() const {
    return text.find_first_not_of(" \t") == std::string_view::npos;
  }
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 1;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<Token> tokenize(const Line& line) {
  std::vector<Token> tokens;
  const std::string_view text = line.text;
  std::size_t k = 0;
  while (k < text.size()) {
    if (text[k] == ' ' || text[k] == '\t') {
      ++k;
      continue;
    }
    const std::size_t start = k;
    while (k < text.size() && text[k] != ' ' && text[k] != '\t') ++k;
    const std::string_view word = text.substr(start, k - start);
    const int column = static_cast<int>(start) + 1;
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      throw ParseError(line.number, column,
                       "expected an integer, found '" + std::string(word) + "'");
    }
    tokens.push_back({value, column});
  }
  return tokens;
}

}  // namespace

MolsSet parse_square_file(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty() || lines.front().blank()) {
    throw ParseError(1, 0, "missing header '<order> <count>'");
  }
  const std::vector<Token> header = tokenize(lines.front());
  if (header.size() != 2) {
    throw ParseError(1, 0, "header must be '<order> <count>'");
  }
  for (const Token& token : header) {
    if (token.value < 1) {
      throw ParseError(1, token.column, "header values must be positive");
    }
  }
  const int n = header[0].value;
  const int m = header[1].value;

  std::size_t cursor = 1;
  auto eof_line = [&] {
    return lines.empty() ? 1 : lines.back().number + 1;
  };

  std::vector<LatinSquare> squares;
  for (int block = 1; block <= m; ++block) {
    if (block > 1) {
      if (cursor >= lines.size()) {
        throw ParseError(eof_line(), 0,
                         "expected " + std::to_string(m) + " blocks, found " +
                             std::to_string(block - 1));
      }
      if (!lines[cursor].blank()) {
        throw ParseError(lines[cursor].number, 0,
                         "expected a blank line between blocks");
      }
      ++cursor;
    }
    SymbolGrid rows;
    for (int r = 0; r < n; ++r, ++cursor) {
      if (cursor >= lines.size() || lines[cursor].blank()) {
        const int where = cursor < lines.size() ? lines[cursor].number : eof_line();
        throw ParseError(where, 0,
                         "block " + std::to_string(block) + " has " +
                             std::to_string(r) + " rows, expected " +
                             std::to_string(n));
      }
      const Line& line = lines[cursor];
      const std::vector<Token> tokens = tokenize(line);
      if (static_cast<int>(tokens.size()) != n) {
        throw ParseError(line.number, 0,
                         "expected " + std::to_string(n) + " symbols, found " +
                             std::to_string(tokens.size()));
      }
      std::vector<int> row;
      row.reserve(tokens.size());
      for (const Token& token : tokens) {
        if (token.value < 1 || token.value > n) {
          throw ParseError(line.number, token.column,
                           "symbol " + std::to_string(token.value) +
                               " outside 1.." + std::to_string(n));
        }
        row.push_back(token.value);
      }
      rows.push_back(std::move(row));
    }
    const LatinReport report = validate_latin(rows);
    if (!report.ok()) {
      throw DomainError("block " + std::to_string(block) +
                        " is not a Latin square: " +
                        to_string(report.violations.front()));
    }
    squares.push_back(LatinSquare::from_rows(rows));
  }
  for (; cursor < lines.size(); ++cursor) {
    if (!lines[cursor].blank()) {
      throw ParseError(lines[cursor].number, 0,
                       "unexpected content after block " + std::to_string(m));
    }
  }
  return MolsSet(std::move(squares), FamilyKind::kExternal);
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::kDot;
  if (name == "edges" || name == "edge-list") return ExportFormat::kEdgeList;
  if (name == "json") return ExportFormat::kJson;
  throw DomainError("unknown export format '" + std::string(name) + "'");
}

namespace {

std::string kind_name(GraphKind kind) {
  return kind == GraphKind::kChainConstruction ? "chain-construction"
                                               : "complete-multipartite";
}

std::string to_edge_list(const PartiteGraph& graph) {
  std::string out;
  for (int id = 0; id < graph.vertex_count(); ++id) {
    out += "vertex " + vertex_name(graph.vertex_at(static_cast<std::size_t>(id))) + '\n';
  }
  for (const Edge& edge : graph.edges()) {
    out += vertex_name(edge.from) + ' ' + vertex_name(edge.to) + '\n';
  }
  return out;
}

std::string to_dot(const PartiteGraph& graph) {
  const bool directed = graph.kind() == GraphKind::kChainConstruction;
  std::string out = directed ? "digraph tortho {\n" : "graph tortho {\n";
  for (int part = 0; part < graph.part_count(); ++part) {
    const std::string label = part_label(part);
    out += "  subgraph cluster_" + label + " {\n";
    out += "    label=\"" + label + "\";\n";
    for (int index = 1; index <= graph.part_sizes()[static_cast<std::size_t>(part)]; ++index) {
      out += "    " + vertex_name({part, index}) + ";\n";
    }
    out += "  }\n";
  }
  const std::string arrow = directed ? " -> " : " -- ";
  for (const Edge& edge : graph.edges()) {
    out += "  " + vertex_name(edge.from) + arrow + vertex_name(edge.to) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const PartiteGraph& graph) {
  nlohmann::json doc;
  doc["kind"] = kind_name(graph.kind());
  doc["parts"] = nlohmann::json::array();
  for (int part = 0; part < graph.part_count(); ++part) {
    doc["parts"].push_back(
        {{"label", part_label(part)},
         {"size", graph.part_sizes()[static_cast<std::size_t>(part)]}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const Edge& edge : graph.edges()) {
    doc["edges"].push_back({vertex_name(edge.from), vertex_name(edge.to)});
  }
  doc["channels"] = nlohmann::json::array();
  for (const ChannelChain& chain : graph.channels()) {
    doc["channels"].push_back(
        {{"cell", {chain.cell.row, chain.cell.column}}, {"tuple", chain.tuple}});
  }
  return doc.dump(2) + '\n';
}

}  // namespace

std::string export_graph(const PartiteGraph& graph, ExportFormat format) {
  switch (format) {
    case ExportFormat::kDot:
      return to_dot(graph);
    case ExportFormat::kEdgeList:
      return to_edge_list(graph);
    case ExportFormat::kJson:
      return to_json(graph);
  }
  throw DomainError("unknown export format");
}

}  // namespace tortho
