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

// Independent reference implementations used only by tests.

#ifndef UNIWIENER_TESTS_ORACLES_HPP_
#define UNIWIENER_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "uniwiener/graph.hpp"

namespace oracle {

using uniwiener::Edge;
using uniwiener::Graph;

inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const int n = g.order();
  const int inf = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Floyd-Warshall sum over unordered pairs.
inline std::uint64_t wiener(const Graph& g) {
  const auto d = distance_matrix(g);
  std::uint64_t w = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) w += static_cast<std::uint64_t>(d[i][j]);
  return w;
}

inline int even_degrees(const Graph& g) {
  std::vector<int> deg(g.order(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return static_cast<int>(std::count_if(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; }));
}

// Tries every bijection. Small n only.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  const auto ea = a.edges();
  do {
    bool ok = true;
    for (const Edge& e : ea) {
      if (!b.has_edge(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Graph permuted(const Graph& g, const std::vector<int>& p) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({p[e.u], p[e.v]});
  return Graph(g.order(), edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Uniform labelled tree via a Pruefer sequence.
inline std::vector<Edge> random_tree(int n, std::mt19937& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = pick(rng);
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (deg[leaf] == 1) {
        edges.push_back({leaf, x});
        --deg[leaf];
        --deg[x];
        break;
      }
    }
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.push_back({u, v});
      }
    }
  }
  return edges;
}

}  // namespace oracle

#endif  // UNIWIENER_TESTS_ORACLES_HPP_
