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

#ifndef TORTHO_PARTITE_GRAPH_HPP_
#define TORTHO_PARTITE_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tortho/error.hpp"
#include "tortho/orthogonality.hpp"

namespace tortho {

// A vertex is a (part, index) pair. Parts are 0-based positions; the index is
// 1-based and equals the symbol for chain-construction graphs.
struct Vertex {
  int part = 0;
  int index = 1;

  auto operator<=>(const Vertex&) const = default;
};

// Parts are labelled A..Z, AA..AZ, BA.. by position.
std::string part_label(int part);
std::string vertex_name(const Vertex& vertex);

// Chain edges run from part c to part c+1. Complete multipartite edges are
// undirected and stored with `from` in the lower-numbered part.
struct Edge {
  Vertex from;
  Vertex to;

  auto operator<=>(const Edge&) const = default;
};

// One cell's tuple read as the path (A, a1) -> (B, a2) -> ... .
struct ChannelChain {
  Cell cell;
  std::vector<int> tuple;

  std::vector<Vertex> path() const;
};

enum class GraphKind { kChainConstruction, kCompleteMultipartite };

class PartiteGraph {
 public:
  GraphKind kind() const { return kind_; }
  int part_count() const { return static_cast<int>(part_sizes_.size()); }
  const std::vector<int>& part_sizes() const { return part_sizes_; }
  int vertex_count() const { return part_offsets_.back(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Sorted by (from, to); parallel edges are adjacent.
  const std::vector<Edge>& edges() const { return edges_; }
  // Row-major cell order. Empty for complete multipartite graphs.
  const std::vector<ChannelChain>& channels() const { return channels_; }

  bool has_vertex(const Vertex& vertex) const;
  // Dense id in [0, vertex_count()), ordered by part then index.
  std::size_t vertex_id(const Vertex& vertex) const;
  Vertex vertex_at(std::size_t id) const;

 private:
  friend PartiteGraph build_partite_graph(const TupleArray&);
  friend PartiteGraph make_complete_multipartite(std::span<const int>);

  PartiteGraph(GraphKind kind, std::vector<int> part_sizes);

  GraphKind kind_;
  std::vector<int> part_sizes_;
  std::vector<int> part_offsets_;
  std::vector<Edge> edges_;
  std::vector<ChannelChain> channels_;
};

class NotOrthogonalError : public DomainError {
 public:
  explicit NotOrthogonalError(OrthogonalityReport report);
  const OrthogonalityReport& report() const { return report_; }

 private:
  OrthogonalityReport report_;
};

// t parts of n vertices; every tuple (a1..at) contributes the chain
// a1 -> a2 -> ... -> at. Throws NotOrthogonalError when two cells share a
// tuple.
PartiteGraph build_partite_graph(const TupleArray& array);

struct MultiplicityReport {
  int max_multiplicity = 0;  // 0 only for an edgeless graph
  std::vector<std::pair<Edge, int>> duplicated_edges;

  bool simple() const { return duplicated_edges.empty(); }
};

MultiplicityReport edge_multiplicity(const PartiteGraph& graph);

// Edges are taken as undirected. On success `coloring` holds a 0/1 colour
// per vertex id; otherwise `odd_walk` is a closed walk of odd length whose
// first and last vertex coincide.
struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;
  std::vector<Vertex> odd_walk;
};

BipartiteResult is_bipartite(const PartiteGraph& graph);

// Every pair of vertices in different parts is joined once.
PartiteGraph make_complete_multipartite(std::span<const int> part_sizes);

// Balanced complete m-partite graph on n vertices; the n mod m larger parts
// come first. Requires 1 <= m <= n.
PartiteGraph make_turan_graph(int parts, int vertices);

// Closed form C(n-k, 2) + (m-1) C(k+1, 2) with k = floor(n/m).
std::int64_t turan_edge_count(int parts, int vertices);

PartiteGraph complete_bipartite(int left, int right);

struct GraphStats {
  int vertex_count = 0;
  std::size_t edge_count = 0;
  // Indexed [part][index-1]; edges counted with multiplicity.
  std::vector<std::vector<int>> degree;
  std::vector<std::vector<int>> in_degree;
  std::vector<std::vector<int>> out_degree;
  bool simple = true;
};

GraphStats graph_stats(const PartiteGraph& graph);

// Stored chains whose path visits `vertex`, in row-major cell order.
std::vector<ChannelChain> channels_through(const PartiteGraph& graph,
                                           const Vertex& vertex);

// Published expectation about parallel edges for the prime-based families:
// simple graphs for n prime and 2 <= t <= n-1, parallel edges for n+1 prime
// and 3 <= t <= n. nullopt when neither applies.
struct MultiplicityClaim {
  bool expects_parallel_edges = false;
  std::string basis;
};

std::optional<MultiplicityClaim> multiplicity_claim(int order, int t);

}  // namespace tortho

#endif  // TORTHO_PARTITE_GRAPH_HPP_
