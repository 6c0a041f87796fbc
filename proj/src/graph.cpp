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

#include "uniwiener/graph.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

#include "uniwiener/error.hpp"

namespace uniwiener {

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v)) {
      throw Error(Errc::VertexOutOfRange, "edge " + std::to_string(e.u) + " " +
                                              std::to_string(e.v) + " with n=" +
                                              std::to_string(n));
    }
    if (e.u == e.v) throw Error(Errc::SelfLoop, "vertex " + std::to_string(e.u));
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (auto it = std::adjacent_find(list.begin(), list.end()); it != list.end()) {
      throw Error(Errc::DuplicateEdge,
                  "edge " + std::to_string(v) + " " + std::to_string(*it));
    }
  }
  edge_count_ = edges.size();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!contains(v)) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  return adjacency_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[static_cast<std::size_t>(u)]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

// Fills dist (-1 = unreachable) and returns the sum over reachable vertices.
std::uint64_t bfs_sum(const Graph& g, Vertex source, std::vector<int>& dist,
                      std::vector<Vertex>& queue, int& reached) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  std::uint64_t sum = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const int dx = dist[static_cast<std::size_t>(x)];
    sum += static_cast<std::uint64_t>(dx);
    for (Vertex y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dx + 1;
        queue.push_back(y);
      }
    }
  }
  reached = static_cast<int>(queue.size());
  return sum;
}

}  // namespace

DistanceVector bfs(const Graph& g, Vertex source) {
  if (!g.contains(source)) {
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(source));
  }
  DistanceVector out;
  out.source = source;
  out.dist.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  int reached = 0;
  bfs_sum(g, source, out.dist, queue, reached);
  out.reachable.resize(out.dist.size());
  for (std::size_t i = 0; i < out.dist.size(); ++i) out.reachable[i] = out.dist[i] >= 0;
  return out;
}

Transmission transmission(const Graph& g, Vertex u) {
  if (!g.contains(u)) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u));
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> queue;
  int reached = 0;
  const std::uint64_t sum = bfs_sum(g, u, dist, queue, reached);
  if (reached != g.order()) return Infinite{};
  return sum;
}

std::uint64_t wiener(const Graph& g) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(n));
  std::uint64_t twice = 0;
  for (Vertex s = 0; s < n; ++s) {
    int reached = 0;
    twice += bfs_sum(g, s, dist, queue, reached);
    if (reached != n) throw Error(Errc::Disconnected, "transmission is infinite");
  }
  return twice / 2;
}

std::uint64_t wiener_omp(const Graph& g, int jobs) {
  const int n = g.order();
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::uint64_t twice = 0;
  bool disconnected = false;
#pragma omp parallel num_threads(threads) reduction(+ : twice) reduction(|| : disconnected)
  {
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (Vertex s = 0; s < n; ++s) {
      int reached = 0;
      twice += bfs_sum(g, s, dist, queue, reached);
      if (reached != n) disconnected = true;
    }
  }
  if (disconnected) throw Error(Errc::Disconnected, "transmission is infinite");
  return twice / 2;
}

int even_degree_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += (g.degree(v) % 2 == 0) ? 1 : 0;
  return count;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<int> dist(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> queue;
  int reached = 0;
  bfs_sum(g, 0, dist, queue, reached);
  return reached == g.order();
}

std::vector<Vertex> two_core(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (removed[static_cast<std::size_t>(v)]) continue;
    removed[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] <= 1) {
        stack.push_back(w);
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[static_cast<std::size_t>(v)]) core.push_back(v);
  }
  return core;
}

UnicyclicGraph::UnicyclicGraph(Graph g) : graph_(std::move(g)) {
  const int n = graph_.order();
  if (graph_.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::EdgeCountMismatch, std::to_string(graph_.size()) +
                                             " edges on " + std::to_string(n) +
                                             " vertices");
  }
  if (!is_connected(graph_)) throw Error(Errc::NotConnected, "graph is not connected");

  const std::vector<Vertex> core = two_core(graph_);
  on_cycle_.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v : core) on_cycle_[static_cast<std::size_t>(v)] = 1;

  // Connected with |E| = |V|: the 2-core is a single cycle.
  auto cycle_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : graph_.neighbors(v)) {
      if (on_cycle_[static_cast<std::size_t>(w)]) out.push_back(w);
    }
    return out;
  };
  const Vertex start = core.front();
  Vertex prev = start;
  Vertex cur = cycle_neighbors(start).front();
  cycle_.push_back(start);
  while (cur != start) {
    cycle_.push_back(cur);
    const auto nb = cycle_neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
}

std::vector<Vertex> UnicyclicGraph::hanging_tree(Vertex root) const {
  if (!graph_.contains(root) || !on_cycle(root)) {
    throw Error(Errc::PreconditionViolated,
                "vertex " + std::to_string(root) + " is not on the cycle");
  }
  std::vector<Vertex> order{root};
  std::vector<char> seen(static_cast<std::size_t>(graph_.order()), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : graph_.neighbors(order[head])) {
      if (seen[static_cast<std::size_t>(w)] || on_cycle(w)) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      order.push_back(w);
    }
  }
  return order;
}

UnicyclicGraph build_unicyclic(int n, const std::vector<Edge>& edges) {
  return UnicyclicGraph(Graph(n, edges));
}

}  // namespace uniwiener
