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

#include "tortho/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "tortho/error.hpp"
#include "tortho/io.hpp"
#include "tortho/oracle.hpp"
#include "tortho/orthogonality.hpp"
#include "tortho/partite_graph.hpp"

namespace tortho {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + path + "'");
  file << content;
}

std::string format_cell(const Cell& cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.column) + ")";
}

std::string format_subset(const std::vector<std::size_t>& subset) {
  std::string out;
  for (const std::size_t index : subset) {
    if (!out.empty()) out += ',';
    out += std::to_string(index + 1);
  }
  return out;
}

std::string format_path(const ChannelChain& chain) {
  std::string out;
  for (const Vertex& v : chain.path()) {
    if (!out.empty()) out += " -> ";
    out += vertex_name(v);
  }
  return out;
}

// 1-based indices from the command line, or the first t squares.
std::vector<std::size_t> choose_squares(const MolsSet& set, int t,
                                        const std::vector<int>& requested) {
  if (t < 2 || static_cast<std::size_t>(t) > set.size()) {
    throw DomainError("t=" + std::to_string(t) + " outside 2.." +
                      std::to_string(set.size()));
  }
  std::vector<std::size_t> indices;
  if (requested.empty()) {
    indices.resize(static_cast<std::size_t>(t));
    std::iota(indices.begin(), indices.end(), std::size_t{0});
    return indices;
  }
  if (static_cast<int>(requested.size()) != t) {
    throw UsageError("--squares lists " + std::to_string(requested.size()) +
                     " squares but --t is " + std::to_string(t));
  }
  for (const int index : requested) {
    if (index < 1 || static_cast<std::size_t>(index) > set.size()) {
      throw DomainError("square index " + std::to_string(index) +
                        " outside 1.." + std::to_string(set.size()));
    }
    indices.push_back(static_cast<std::size_t>(index - 1));
  }
  return indices;
}

// "C:3" or "3:3" (1-based part number).
Vertex parse_vertex(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
    throw UsageError("vertex must look like PART:SYMBOL, e.g. C:3");
  }
  const std::string part = spec.substr(0, colon);
  const std::string symbol = spec.substr(colon + 1);
  if (!std::all_of(symbol.begin(), symbol.end(), ::isdigit)) {
    throw UsageError("vertex symbol must be a number: '" + symbol + "'");
  }
  Vertex vertex{0, std::stoi(symbol)};
  if (std::all_of(part.begin(), part.end(), ::isdigit)) {
    vertex.part = std::stoi(part) - 1;
  } else if (std::all_of(part.begin(), part.end(), ::isupper)) {
    int value = 0;
    for (const char c : part) value = value * 26 + (c - 'A' + 1);
    vertex.part = value - 1;
  } else {
    throw UsageError("vertex part must be a label (A, B, ...) or a number");
  }
  return vertex;
}

struct Selection {
  MolsSet set;
  TupleArray array;
};

Selection load_selection(const std::string& path, int t,
                         const std::vector<int>& requested) {
  MolsSet set = parse_square_file(read_file(path));
  const auto indices = choose_squares(set, t, requested);
  TupleArray array = superimpose(set, indices);
  return {std::move(set), std::move(array)};
}

int cmd_gen(int order, const std::string& method, const std::string& path,
            std::ostream& out) {
  FamilyMethod chosen = FamilyMethod::kAuto;
  if (method == "additive") chosen = FamilyMethod::kAdditive;
  if (method == "shift") chosen = FamilyMethod::kShift;
  write_output(path, serialize_square_file(make_mols_family(order, chosen)), out);
  return kExitOk;
}

int cmd_verify(int t, const std::string& path, std::ostream& out) {
  const MolsSet set = parse_square_file(read_file(path));
  const SetOrthogonalityReport report = verify_set_orthogonality(set, t);
  const std::size_t cells = static_cast<std::size_t>(set.order()) * set.order();
  out << "order " << set.order() << ", " << set.size() << " squares, t=" << t
      << ", " << report.subsets.size() << " subsets\n";
  std::size_t passing = 0;
  for (const SubsetVerdict& verdict : report.subsets) {
    out << "squares " << format_subset(verdict.subset) << ": ";
    if (verdict.report.is_orthogonal) {
      ++passing;
      out << "orthogonal (" << verdict.report.distinct_count << "/" << cells
          << " distinct)\n";
    } else {
      const auto& [a, b] = *verdict.report.first_collision;
      out << "NOT orthogonal (" << verdict.report.distinct_count << "/" << cells
          << " distinct); cells " << format_cell(a) << " and "
          << format_cell(b) << " share a tuple\n";
    }
  }
  out << "verdict: " << passing << "/" << report.subsets.size()
      << " subsets " << t << "-orthogonal\n";
  return report.all_orthogonal ? kExitOk : kExitDomainError;
}

int cmd_graph(int t, const std::string& path, const std::vector<int>& squares,
              const std::string& format, const std::string& out_path,
              std::ostream& out) {
  const ExportFormat chosen = parse_export_format(format);
  const Selection selection = load_selection(path, t, squares);
  const PartiteGraph graph = build_partite_graph(selection.array);
  write_output(out_path, export_graph(graph, chosen), out);
  return kExitOk;
}

int cmd_stats(int t, const std::string& path, const std::vector<int>& squares,
              std::ostream& out, std::ostream& err) {
  const Selection selection = load_selection(path, t, squares);
  const PartiteGraph graph = build_partite_graph(selection.array);
  const GraphStats stats = graph_stats(graph);
  const MultiplicityReport multiplicity = edge_multiplicity(graph);
  const int oracle_multiplicity =
      oracle::brute_force_max_multiplicity(selection.array);
  const BipartiteResult bipartite = is_bipartite(graph);

  out << "order: " << selection.set.order() << '\n';
  out << "t: " << t << '\n';
  out << "squares: " << format_subset(selection.array.source()) << '\n';
  out << "vertices: " << stats.vertex_count << '\n';
  out << "edges: " << stats.edge_count << '\n';
  for (int part = 0; part < graph.part_count(); ++part) {
    out << "degrees " << part_label(part) << ":";
    for (const int d : stats.degree[static_cast<std::size_t>(part)]) out << ' ' << d;
    out << '\n';
  }
  out << "simple: " << (stats.simple ? "yes" : "no") << '\n';
  out << "max multiplicity: " << multiplicity.max_multiplicity << '\n';
  out << "oracle max multiplicity: " << oracle_multiplicity << '\n';
  out << "duplicated edges: " << multiplicity.duplicated_edges.size() << '\n';
  for (const auto& [edge, count] : multiplicity.duplicated_edges) {
    out << "  " << vertex_name(edge.from) << ' ' << vertex_name(edge.to)
        << " x" << count << '\n';
  }
  out << "bipartite: ";
  if (bipartite.bipartite) {
    out << "yes\n";
  } else {
    out << "no; odd closed walk";
    for (const Vertex& v : bipartite.odd_walk) out << ' ' << vertex_name(v);
    out << '\n';
  }

  if (const auto claim = multiplicity_claim(selection.set.order(), t)) {
    const bool parallel = multiplicity.max_multiplicity > 1;
    out << "note: " << claim->basis << "; computed max multiplicity "
        << multiplicity.max_multiplicity << ": "
        << (parallel == claim->expects_parallel_edges ? "consistent"
                                                      : "DISCREPANCY")
        << '\n';
  }
  if (oracle_multiplicity != multiplicity.max_multiplicity) {
    err << "error: oracle multiplicity " << oracle_multiplicity
        << " disagrees with graph multiplicity "
        << multiplicity.max_multiplicity << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

int cmd_turan(int m, int n, std::ostream& out) {
  const std::int64_t formula = turan_edge_count(m, n);
  const std::int64_t brute = oracle::count_edges_brute(make_turan_graph(m, n));
  out << "formula: " << formula << '\n';
  out << "brute force: " << brute << '\n';
  return formula == brute ? kExitOk : kExitDomainError;
}

int cmd_channels(int t, const std::string& path, const std::string& vertex_spec,
                 std::ostream& out) {
  const Vertex vertex = parse_vertex(vertex_spec);
  const Selection selection = load_selection(path, t, {});
  const PartiteGraph graph = build_partite_graph(selection.array);
  const auto chains = channels_through(graph, vertex);
  out << chains.size() << " channels through " << vertex_name(vertex) << '\n';
  for (const ChannelChain& chain : chains) {
    out << "cell " << format_cell(chain.cell) << ": " << format_path(chain)
        << '\n';
  }
  return kExitOk;
}

int cmd_check(std::ostream& out) {
  bool all_ok = true;
  auto line = [&](bool ok, const std::string& what) {
    all_ok = all_ok && ok;
    out << (ok ? "[agree] " : "[DISAGREE] ") << what << '\n';
  };

  std::size_t arrays = 0;
  std::size_t distinct_mismatch = 0;
  std::size_t multiplicity_mismatch = 0;
  for (int n = 2; n <= 7; ++n) {
    if (!is_prime(n) && !is_prime(n + 1)) continue;
    const MolsSet set = make_mols_family(n);
    for (int t = 2; static_cast<std::size_t>(t) <= set.size(); ++t) {
      for (const SubsetVerdict& verdict :
           verify_set_orthogonality(set, t).subsets) {
        const TupleArray array = superimpose(set, verdict.subset);
        ++arrays;
        if (oracle::brute_force_distinctness(array) !=
            verdict.report.is_orthogonal) {
          ++distinct_mismatch;
        }
        if (verdict.report.is_orthogonal &&
            oracle::brute_force_max_multiplicity(array) !=
                edge_multiplicity(build_partite_graph(array)).max_multiplicity) {
          ++multiplicity_mismatch;
        }
      }
    }
  }
  line(distinct_mismatch == 0,
       "tuple distinctness, " + std::to_string(arrays) + " arrays (orders 2..7)");
  line(multiplicity_mismatch == 0, "edge multiplicity on orthogonal arrays");

  std::size_t turan_mismatch = 0;
  for (int n = 1; n <= 50; ++n) {
    for (int m = 1; m <= n; ++m) {
      if (turan_edge_count(m, n) !=
          oracle::count_edges_brute(make_turan_graph(m, n))) {
        ++turan_mismatch;
      }
    }
  }
  line(turan_mismatch == 0, "Turan edge count, 1 <= m <= n <= 50 (1275 cases)");

  line(!oracle::exhaustive_mols_search(2, 2, 2).found,
       "no orthogonal pair of order 2");
  line(oracle::exhaustive_mols_search(3, 2, 2).found,
       "orthogonal pair of order 3 exists");

  out << (all_ok ? "all checks agree\n" : "oracle disagreement found\n");
  return all_ok ? kExitOk : kExitDomainError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Build mutually t-orthogonal Latin square families and their "
               "t-partite channel graphs",
               "tortho"};
  app.require_subcommand(1);

  int order = 0;
  std::string method = "auto";
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a prime-based family as a square file");
  gen->add_option("--order", order, "Order n of the squares")->required();
  gen->add_option("--method", method, "auto, additive or shift")
      ->check(CLI::IsMember({"auto", "additive", "shift"}));
  gen->add_option("--out", out_path, "Output file (default stdout)");

  int t = 0;
  std::string in_path;
  auto* verify = app.add_subcommand("verify", "Check every t-subset for t-orthogonality");
  verify->add_option("--t", t, "Subset size")->required();
  verify->add_option("--in", in_path, "Square file")->required();

  std::vector<int> squares;
  std::string format;
  auto* graph = app.add_subcommand("graph", "Export the channel graph of chosen squares");
  graph->add_option("--t", t, "Number of squares to superimpose")->required();
  graph->add_option("--in", in_path, "Square file")->required();
  graph->add_option("--squares", squares, "1-based square indices (default first t)")
      ->delimiter(',');
  graph->add_option("--format", format, "dot, edges or json")
      ->required()
      ->check(CLI::IsMember({"dot", "edges", "edge-list", "json"}));
  graph->add_option("--out", out_path, "Output file (default stdout)");

  auto* stats = app.add_subcommand("stats", "Summarise the channel graph of the first t squares");
  stats->add_option("--t", t, "Number of squares to superimpose")->required();
  stats->add_option("--in", in_path, "Square file")->required();
  stats->add_option("--squares", squares, "1-based square indices (default first t)")
      ->delimiter(',');

  int m = 0;
  int n = 0;
  auto* turan = app.add_subcommand("turan", "Turan graph edge count, formula and brute force");
  turan->add_option("--m", m, "Number of parts")->required();
  turan->add_option("--n", n, "Number of vertices")->required();

  std::string vertex;
  auto* channels = app.add_subcommand("channels", "List channels through a vertex");
  channels->add_option("--t", t, "Number of squares to superimpose")->required();
  channels->add_option("--in", in_path, "Square file")->required();
  channels->add_option("--vertex", vertex, "PART:SYMBOL, e.g. C:3")->required();

  auto* check = app.add_subcommand("check", "Run the oracle agreement suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(order, method, out_path, out);
    if (verify->parsed()) return cmd_verify(t, in_path, out);
    if (graph->parsed()) return cmd_graph(t, in_path, squares, format, out_path, out);
    if (stats->parsed()) return cmd_stats(t, in_path, squares, out, err);
    if (turan->parsed()) return cmd_turan(m, n, out);
    if (channels->parsed()) return cmd_channels(t, in_path, vertex, out);
    if (check->parsed()) return cmd_check(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace tortho
