// Copyright 2026 The uniwiener Authors
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

#ifndef UNIWIENER_GRAPH_HPP_
#define UNIWIENER_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace uniwiener {

using Vertex = int;

// Undirected edge. Normalised edges have u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on the dense vertex set 0..n-1. Immutable once built;
// every transformation produces a new Graph.
class Graph {
 public:
  Graph() = default;

  // Throws Error{SelfLoop | DuplicateEdge | VertexOutOfRange}.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  // Normalised, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Shortest hop counts from one source.
struct DistanceVector {
  Vertex source = 0;
  std::vector<int> dist;
  std::vector<bool> reachable;
};

DistanceVector bfs(const Graph& g, Vertex source);

// d(u,G) is infinite on a disconnected graph; that case is its own alternative
// rather than a reserved integer.
struct Infinite {
  friend bool operator==(Infinite, Infinite) = default;
};
using Transmission = std::variant<std::uint64_t, Infinite>;

inline bool is_infinite(const Transmission& t) noexcept {
  return std::holds_alternative<Infinite>(t);
}

Transmission transmission(const Graph& g, Vertex u);

// Serial reference: one BFS per vertex. Throws Error{Disconnected}.
std::uint64_t wiener(const Graph& g);

// Same quantity with the per-source BFS loop spread over OpenMP threads.
// jobs <= 0 uses the OpenMP default team size.
std::uint64_t wiener_omp(const Graph& g, int jobs = 0);

int even_degree_count(const Graph& g);
bool is_connected(const Graph& g);

// Connected, |E| = |V|, exactly one cycle.
class UnicyclicGraph {
 public:
  // Throws Error{EdgeCountMismatch | NotConnected}.
  explicit UnicyclicGraph(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  int girth() const noexcept { return static_cast<int>(cycle_.size()); }
  // Cycle in walking order, starting at its smallest vertex and heading to
  // the smaller of that vertex's two cycle neighbours.
  std::span<const Vertex> cycle() const noexcept { return cycle_; }
  bool on_cycle(Vertex v) const { return on_cycle_.at(static_cast<std::size_t>(v)) != 0; }

  // Vertices of T_root, the component of G - E(C) containing `root`, in BFS
  // order starting with `root`. Throws if root is not on the cycle.
  std::vector<Vertex> hanging_tree(Vertex root) const;

  friend bool operator==(const UnicyclicGraph& a, const UnicyclicGraph& b) {
    return a.graph_ == b.graph_;
  }

 private:
  Graph graph_;
  std::vector<Vertex> cycle_;
  std::vector<char> on_cycle_;
};

UnicyclicGraph build_unicyclic(int n, const std::vector<Edge>& edges);

// The pair (n, r) naming U_{n,r}. Plain value; operations validate it against
// their own contracts.
struct ClassKey {
  int n = 0;
  int r = 0;

  // n >= 3, 0 <= r <= n, n - r even.
  bool valid() const noexcept { return n >= 3 && r >= 0 && r <= n && (n - r) % 2 == 0; }
  // r <= (n + 3) / 2, the range where minimisers are fully characterised.
  bool characterised() const noexcept { return 2 * r <= n + 3; }

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

inline ClassKey class_of(const Graph& g) { return {g.order(), even_degree_count(g)}; }

// Vertices surviving repeated leaf deletion, ascending. Empty for forests; the
// cycle itself for unicyclic graphs.
std::vector<Vertex> two_core(const Graph& g);

}  // namespace uniwiener

#endif  // UNIWIENER_GRAPH_HPP_
