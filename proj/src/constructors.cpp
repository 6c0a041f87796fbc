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

#include "uniwiener/constructors.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "uniwiener/canonical.hpp"
#include "uniwiener/error.hpp"

namespace uniwiener {

UnicyclicGraph make_cycle(int girth) {
  if (girth < 3) throw Error(Errc::GirthTooSmall, "girth " + std::to_string(girth));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < girth; ++i) edges.push_back({i, (i + 1) % girth});
  return UnicyclicGraph(Graph(girth, edges));
}

Graph make_path(int edges) {
  if (edges < 0) throw Error(Errc::InvalidSpec, "negative path length");
  std::vector<Edge> list;
  for (Vertex i = 0; i < edges; ++i) list.push_back({i, i + 1});
  return Graph(edges + 1, list);
}

RootedTree make_star(int leaves) {
  if (leaves < 0) throw Error(Errc::InvalidSpec, "negative leaf count");
  return make_subdivided_star({std::vector<int>(static_cast<std::size_t>(leaves), 1)});
}

RootedTree make_sab(int branches, int edges) {
  if (branches < 1) throw Error(Errc::InvalidSpec, "almost balanced star needs b >= 1");
  if (edges < branches) {
    throw Error(Errc::TooFewVertices, std::to_string(edges) + " edges for " +
                                          std::to_string(branches) + " branches");
  }
  const int shorter = edges / branches;
  const int longer_count = edges % branches;
  SubdividedStarSpec spec;
  spec.lengths.assign(static_cast<std::size_t>(longer_count), shorter + 1);
  spec.lengths.resize(static_cast<std::size_t>(branches), shorter);
  return make_subdivided_star(spec);
}

int HComposition::order() const noexcept {
  int n = girth();
  for (const auto& t : trees) n += t.size() - 1;
  return n;
}

UnicyclicGraph make_H(const HComposition& spec) {
  const int g = spec.girth();
  if (g < 3) throw Error(Errc::GirthTooSmall, "girth " + std::to_string(g));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < g; ++i) edges.push_back({i, (i + 1) % g});
  Vertex next = g;
  for (Vertex i = 0; i < g; ++i) {
    const RootedTree& tree = spec.trees[static_cast<std::size_t>(i)];
    std::vector<Vertex> label(static_cast<std::size_t>(tree.size()));
    label[static_cast<std::size_t>(tree.root())] = i;
    for (Vertex v = 0; v < tree.size(); ++v) {
      if (v != tree.root()) label[static_cast<std::size_t>(v)] = next++;
    }
    for (Vertex v = 0; v < tree.size(); ++v) {
      if (v == tree.root()) continue;
      edges.push_back({label[static_cast<std::size_t>(tree.parent(v))],
                       label[static_cast<std::size_t>(v)]});
    }
  }
  return UnicyclicGraph(Graph(next, edges));
}

HComposition decompose(const UnicyclicGraph& g) {
  HComposition out;
  const Graph& graph = g.graph();
  for (Vertex root : g.cycle()) {
    const std::vector<Vertex> order = g.hanging_tree(root);  // BFS, root first
    std::map<Vertex, Vertex> local;
    for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<Vertex>(i);
    std::vector<Vertex> parent(order.size(), 0);
    for (std::size_t i = 1; i < order.size(); ++i) {
      for (Vertex w : graph.neighbors(order[i])) {
        auto it = local.find(w);
        if (it != local.end() && it->second < static_cast<Vertex>(i)) {
          parent[i] = it->second;
          break;
        }
      }
    }
    out.trees.push_back(RootedTree::from_parents(std::move(parent)));
  }
  return out;
}

namespace {

HComposition on_cycle(int girth, RootedTree first) {
  HComposition spec;
  spec.trees.assign(static_cast<std::size_t>(girth), RootedTree{});
  spec.trees[0] = std::move(first);
  return spec;
}

// H(SB(1;b1), X1, X2) with b1 odd and X_j in {K1, K2}; realises r = 2 - #K2.
void add_triangle_odd_star(ClassKey key, std::vector<HComposition>& out) {
  if (key.r > 2) return;
  const int k2_count = 2 - key.r;
  const int b1 = key.n - 3 - k2_count;
  if (b1 < 1 || b1 % 2 == 0) return;
  const RootedTree k1 = make_star(0);
  const RootedTree k2 = make_star(1);
  std::vector<std::pair<RootedTree, RootedTree>> orders;
  if (k2_count == 0) orders.push_back({k1, k1});
  if (k2_count == 1) {
    orders.push_back({k2, k1});
    orders.push_back({k1, k2});
  }
  if (k2_count == 2) orders.push_back({k2, k2});
  for (auto& [x1, x2] : orders) out.push_back({{make_star(b1), x1, x2}});
}

void add_c5_pendant(ClassKey key, std::vector<HComposition>& out) {
  HComposition spec = on_cycle(5, make_star(1));
  if (ClassKey{spec.order(), 4} == key) out.push_back(std::move(spec));
}

std::vector<UnicyclicGraph> dedup(const std::vector<HComposition>& specs, ClassKey key) {
  std::map<CanonicalCode, UnicyclicGraph> unique;
  for (const auto& spec : specs) {
    UnicyclicGraph g = make_H(spec);
    if (class_of(g.graph()) != key) {
      throw std::logic_error("family generator produced a graph outside its class");
    }
    unique.emplace(canonical_code(g.graph()), std::move(g));
  }
  std::vector<UnicyclicGraph> out;
  for (auto& [code, g] : unique) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<UnicyclicGraph> theorem1_family(ClassKey key) {
  if (!key.valid()) {
    throw Error(Errc::InvalidClassKey,
                "(" + std::to_string(key.n) + "," + std::to_string(key.r) + ")");
  }
  std::vector<HComposition> specs;
  if (key.r <= 2) {
    add_triangle_odd_star(key, specs);
  } else {
    add_c5_pendant(key, specs);
    const int b = key.n - key.r;
    if (b == 0) {
      specs.push_back(on_cycle(key.n, RootedTree{}));
    } else {
      for (int girth = 3; girth + b <= key.n; ++girth) {
        specs.push_back(on_cycle(girth, make_sab(b, key.n - girth)));
      }
    }
  }
  return dedup(specs, key);
}

std::vector<UnicyclicGraph> theorem2_family(ClassKey key) {
  if (!key.valid()) {
    throw Error(Errc::InvalidClassKey,
                "(" + std::to_string(key.n) + "," + std::to_string(key.r) + ")");
  }
  if (!key.characterised()) {
    throw Error(Errc::ClassKeyOutOfTheoremRange,
                "r=" + std::to_string(key.r) + " exceeds (n+3)/2");
  }
  std::vector<HComposition> specs;
  add_triangle_odd_star(key, specs);
  if (key.r >= 3) {
    add_c5_pendant(key, specs);
    const int b = key.n - key.r;
    // Stars on a triangle and on a 4-cycle: m = n - g must equal b.
    for (int girth : {3, 4}) {
      if (key.n - girth == b) specs.push_back(on_cycle(girth, make_star(b)));
    }
    // Branches of length 1 or 2 on a 5-cycle.
    const int m = key.n - 5;
    if (b >= 1 && m >= b && m <= 2 * b) specs.push_back(on_cycle(5, make_sab(b, m)));
  }
  return dedup(specs, key);
}

}  // namespace uniwiener
