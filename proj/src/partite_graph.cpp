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

#include "tortho/partite_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tortho {

std::string part_label(int part) {
  if (part < 0) throw DomainError("negative part index");
  // Bijective base 26: 0 -> A, 25 -> Z, 26 -> AA.
  std::string label;
  int value = part + 1;
  while (value > 0) {
    --value;
    label.insert(label.begin(), static_cast<char>('A' + value % 26));
    value /= 26;
  }
  return label;
}

std::string vertex_name(const Vertex& vertex) {
  return part_label(vertex.part) + std::to_string(vertex.index);
}

std::vector<Vertex> ChannelChain::path() const {
  std::vector<Vertex> out;
  out.reserve(tuple.size());
  for (std::size_t c = 0; c < tuple.size(); ++c) {
    out.push_back({static_cast<int>(c), tuple[c]});
  }
  return out;
}

PartiteGraph::PartiteGraph(GraphKind kind, std::vector<int> part_sizes)
    : kind_(kind), part_sizes_(std::move(part_sizes)) {
  part_offsets_.reserve(part_sizes_.size() + 1);
  part_offsets_.push_back(0);
  for (const int size : part_sizes_) {
    part_offsets_.push_back(part_offsets_.back() + size);
  }
}

bool PartiteGraph::has_vertex(const Vertex& vertex) const {
  return vertex.part >= 0 && vertex.part < part_count() && vertex.index >= 1 &&
         vertex.index <= part_sizes_[static_cast<std::size_t>(vertex.part)];
}

std::size_t PartiteGraph::vertex_id(const Vertex& vertex) const {
  if (!has_vertex(vertex)) {
    throw DomainError("unknown vertex " + vertex_name(vertex));
  }
  return static_cast<std::size_t>(
      part_offsets_[static_cast<std::size_t>(vertex.part)] + vertex.index - 1);
}

Vertex PartiteGraph::vertex_at(std::size_t id) const {
  const auto it = std::upper_bound(part_offsets_.begin(), part_offsets_.end(),
                                   static_cast<int>(id));
  const int part = static_cast<int>(it - part_offsets_.begin()) - 1;
  return {part, static_cast<int>(id) -
                    part_offsets_[static_cast<std::size_t>(part)] + 1};
}

namespace {

std::string describe_collision(const OrthogonalityReport& report) {
  std::string what = "tuple array is not orthogonal (" +
                     std::to_string(report.distinct_count) + " distinct tuples)";
  if (report.first_collision) {
    const auto& [a, b] = *report.first_collision;
    what += ": cells (" + std::to_string(a.row) + "," +
            std::to_string(a.column) + ") and (" + std::to_string(b.row) +
            "," + std::to_string(b.column) + ") share a tuple";
  }
  return what;
}

}  // namespace

NotOrthogonalError::NotOrthogonalError(OrthogonalityReport report)
    : DomainError(describe_collision(report)), report_(std::move(report)) {}

PartiteGraph build_partite_graph(const TupleArray& array) {
  OrthogonalityReport report = is_t_orthogonal(array);
  if (!report.is_orthogonal) throw NotOrthogonalError(std::move(report));

  const int n = array.order();
  const int t = array.arity();
  PartiteGraph graph(GraphKind::kChainConstruction,
                     std::vector<int>(static_cast<std::size_t>(t), n));
  graph.channels_.reserve(static_cast<std::size_t>(n * n));
  graph.edges_.reserve(static_cast<std::size_t>(n * n * (t - 1)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto tuple = array.tuple(i, j);
      for (int c = 0; c + 1 < t; ++c) {
        graph.edges_.push_back({{c, tuple[static_cast<std::size_t>(c)]},
                                {c + 1, tuple[static_cast<std::size_t>(c + 1)]}});
      }
      graph.channels_.push_back({{i, j}, {tuple.begin(), tuple.end()}});
    }
  }
  std::sort(graph.edges_.begin(), graph.edges_.end());
  return graph;
}

MultiplicityReport edge_multiplicity(const PartiteGraph& graph) {
  MultiplicityReport report;
  const auto& edges = graph.edges();
  for (std::size_t k = 0; k < edges.size();) {
    std::size_t end = k + 1;
    while (end < edges.size() && edges[end] == edges[k]) ++end;
    const int count = static_cast<int>(end - k);
    report.max_multiplicity = std::max(report.max_multiplicity, count);
    if (count > 1) report.duplicated_edges.emplace_back(edges[k], count);
    k = end;
  }
  return report;
}

BipartiteResult is_bipartite(const PartiteGraph& graph) {
  const auto vertex_total = static_cast<std::size_t>(graph.vertex_count());
  std::vector<std::vector<std::size_t>> adjacent(vertex_total);
  for (const Edge& edge : graph.edges()) {
    const std::size_t a = graph.vertex_id(edge.from);
    const std::size_t b = graph.vertex_id(edge.to);
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  BipartiteResult result;
  result.coloring.assign(vertex_total, -1);
  std::vector<std::size_t> parent(vertex_total, kNone);

  auto root_path = [&](std::size_t v) {
    std::vector<std::size_t> path;
    for (; v != kNone; v = parent[v]) path.push_back(v);
    return path;  // v, parent(v), ..., root
  };

  for (std::size_t root = 0; root < vertex_total; ++root) {
    if (result.coloring[root] != -1) continue;
    result.coloring[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const std::size_t v : adjacent[u]) {
        if (result.coloring[v] == -1) {
          result.coloring[v] = 1 - result.coloring[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (result.coloring[v] == result.coloring[u]) {
          // Equal colours mean equal BFS depth parity, so
          // root..u, v..root has odd length.
          auto up = root_path(u);
          std::reverse(up.begin(), up.end());
          const auto down = root_path(v);
          result.odd_walk.clear();
          for (const std::size_t id : up) result.odd_walk.push_back(graph.vertex_at(id));
          for (const std::size_t id : down) result.odd_walk.push_back(graph.vertex_at(id));
          result.coloring.clear();
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  return result;
}

PartiteGraph make_complete_multipartite(std::span<const int> part_sizes) {
  if (part_sizes.empty()) throw DomainError("graph needs at least one part");
  for (const int size : part_sizes) {
    if (size < 1) throw DomainError("part sizes must be positive");
  }
  PartiteGraph graph(GraphKind::kCompleteMultipartite,
                     {part_sizes.begin(), part_sizes.end()});
  const int parts = graph.part_count();
  for (int p = 0; p < parts; ++p) {
    for (int i = 1; i <= part_sizes[static_cast<std::size_t>(p)]; ++i) {
      for (int q = p + 1; q < parts; ++q) {
        for (int j = 1; j <= part_sizes[static_cast<std::size_t>(q)]; ++j) {
          graph.edges_.push_back({{p, i}, {q, j}});
        }
      }
    }
  }
  return graph;
}

namespace {

void check_turan_range(int parts, int vertices) {
  if (parts < 1 || parts > vertices) {
    throw DomainError("Turan graph needs 1 <= m <= n, got m=" +
                      std::to_string(parts) + " n=" + std::to_string(vertices));
  }
}

std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

}  // namespace

PartiteGraph make_turan_graph(int parts, int vertices) {
  check_turan_range(parts, vertices);
  const int small = vertices / parts;
  const int larger = vertices % parts;
  std::vector<int> sizes(static_cast<std::size_t>(parts), small);
  for (int p = 0; p < larger; ++p) ++sizes[static_cast<std::size_t>(p)];
  return make_complete_multipartite(sizes);
}

std::int64_t turan_edge_count(int parts, int vertices) {
  check_turan_range(parts, vertices);
  const std::int64_t k = vertices / parts;
  return choose2(vertices - k) + (parts - 1) * choose2(k + 1);
}

PartiteGraph complete_bipartite(int left, int right) {
  if (left < 1 || right < 1) {
    throw DomainError("K_{r,s} needs r, s >= 1");
  }
  const int sizes[] = {left, right};
  return make_complete_multipartite(sizes);
}

GraphStats graph_stats(const PartiteGraph& graph) {
  GraphStats stats;
  stats.vertex_count = graph.vertex_count();
  stats.edge_count = graph.edge_count();
  for (const int size : graph.part_sizes()) {
    stats.degree.emplace_back(static_cast<std::size_t>(size), 0);
  }
  stats.in_degree = stats.degree;
  stats.out_degree = stats.degree;
  auto slot = [](std::vector<std::vector<int>>& table, const Vertex& v) -> int& {
    return table[static_cast<std::size_t>(v.part)]
                [static_cast<std::size_t>(v.index - 1)];
  };
  for (const Edge& edge : graph.edges()) {
    ++slot(stats.degree, edge.from);
    ++slot(stats.degree, edge.to);
    ++slot(stats.out_degree, edge.from);
    ++slot(stats.in_degree, edge.to);
  }
  stats.simple = std::adjacent_find(graph.edges().begin(),
                                    graph.edges().end()) == graph.edges().end();
  return stats;
}

std::vector<ChannelChain> channels_through(const PartiteGraph& graph,
                                           const Vertex& vertex) {
  if (graph.kind() != GraphKind::kChainConstruction) {
    throw DomainError("channels exist only on chain-construction graphs");
  }
  if (!graph.has_vertex(vertex)) {
    throw DomainError("unknown vertex " + vertex_name(vertex));
  }
  std::vector<ChannelChain> out;
  for (const ChannelChain& chain : graph.channels()) {
    if (chain.tuple[static_cast<std::size_t>(vertex.part)] == vertex.index) {
      out.push_back(chain);
    }
  }
  return out;
}

std::optional<MultiplicityClaim> multiplicity_claim(int order, int t) {
  if (is_prime(order) && t >= 2 && t <= order - 1) {
    return MultiplicityClaim{
        false, "n=" + std::to_string(order) +
                   " is prime: no multiple edges expected for t=2..n-1"};
  }
  if (is_prime(order + 1) && t >= 3 && t <= order) {
    return MultiplicityClaim{
        true, "n+1=" + std::to_string(order + 1) +
                  " is prime: multiple edges expected for t=3..n"};
  }
  return std::nullopt;
}

}  // namespace tortho
