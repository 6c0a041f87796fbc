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

#include "uniwiener/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "uniwiener/canonical.hpp"
#include "uniwiener/constructors.hpp"
#include "uniwiener/error.hpp"

namespace uniwiener {

namespace {

std::string vstr(Vertex v) { return std::to_string(v); }

// Components of G - cut, as vertex lists; each ascending.
std::vector<std::vector<Vertex>> components_without(const Graph& g, Vertex cut) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (s == cut || comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (y != cut && comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Graph rebuild(int n, std::vector<Edge> edges) {
  for (Edge& e : edges) e = e.normalized();
  return Graph(n, edges);
}

void replace_edge(std::vector<Edge>& edges, Edge from, Edge to) {
  const Edge key = from.normalized();
  auto it = std::find_if(edges.begin(), edges.end(),
                         [&](const Edge& e) { return e.normalized() == key; });
  if (it == edges.end()) throw std::logic_error("edge to replace is missing");
  *it = to;
}

std::vector<Vertex> cycle_neighbors(const UnicyclicGraph& g, Vertex x) {
  std::vector<Vertex> out;
  for (Vertex w : g.graph().neighbors(x)) {
    if (g.on_cycle(w)) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> leaf_neighbors(const Graph& g, Vertex x) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(x)) {
    if (g.degree(w) == 1) out.push_back(w);
  }
  return out;
}

}  // namespace

ShiftSpec::ShiftSpec(Graph graph, Vertex u, Vertex v, std::vector<Vertex> x_side,
                     std::vector<Vertex> y_side)
    : graph_(std::move(graph)), u_(u), v_(v), x_(std::move(x_side)), y_(std::move(y_side)) {
  const int n = graph_.order();
  if (!graph_.contains(u_) || !graph_.contains(v_) || u_ == v_) {
    throw Error(Errc::InvalidPartition, "u and v must be distinct vertices");
  }
  if (!is_connected(graph_)) throw Error(Errc::InvalidPartition, "graph must be connected");
  std::sort(x_.begin(), x_.end());
  std::sort(y_.begin(), y_.end());
  x_.erase(std::unique(x_.begin(), x_.end()), x_.end());
  y_.erase(std::unique(y_.begin(), y_.end()), y_.end());
  // side: 0 = H, 1 = X \ {u}, 2 = Y \ {v}
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  auto mark = [&](const std::vector<Vertex>& part, Vertex anchor, Vertex other, int tag) {
    if (!std::binary_search(part.begin(), part.end(), anchor)) {
      throw Error(Errc::InvalidPartition, "part must contain its cut vertex " + vstr(anchor));
    }
    for (Vertex x : part) {
      if (!graph_.contains(x)) throw Error(Errc::InvalidPartition, "vertex " + vstr(x));
      if (x == other) throw Error(Errc::InvalidPartition, "parts overlap at " + vstr(x));
      if (x == anchor) continue;
      if (side[static_cast<std::size_t>(x)] != 0) {
        throw Error(Errc::InvalidPartition, "parts overlap at " + vstr(x));
      }
      side[static_cast<std::size_t>(x)] = tag;
    }
  };
  mark(x_, u_, v_, 1);
  mark(y_, v_, u_, 2);
  for (const Edge& e : graph_.edges()) {
    const int a = side[static_cast<std::size_t>(e.u)];
    const int b = side[static_cast<std::size_t>(e.v)];
    if (a == b) continue;
    // Crossing edges may only join X \ {u} to u, or Y \ {v} to v.
    const bool ok = (a == 1 && e.v == u_) || (b == 1 && e.u == u_) ||
                    (a == 2 && e.v == v_) || (b == 2 && e.u == v_);
    if (!ok) {
      throw Error(Errc::InvalidPartition,
                  "edge " + vstr(e.u) + " " + vstr(e.v) + " bypasses the cut vertices");
    }
  }
  if (x_.size() < 2 || y_.size() < 2) throw Error(Errc::TrivialPart, "X and Y need >= 2 vertices");
}

std::vector<ShiftSpec> shift_specs(const Graph& g) {
  std::vector<ShiftSpec> out;
  if (!is_connected(g)) return out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      auto side_parts = [&](Vertex cut, Vertex avoid) {
        std::vector<std::vector<Vertex>> parts;
        for (auto& c : components_without(g, cut)) {
          if (!std::binary_search(c.begin(), c.end(), avoid)) parts.push_back(std::move(c));
        }
        return parts;
      };
      const auto xs = side_parts(u, v);
      const auto ys = side_parts(v, u);
      if (xs.empty() || ys.empty() || xs.size() > 20 || ys.size() > 20) continue;
      for (unsigned xm = 1; xm < (1u << xs.size()); ++xm) {
        std::vector<Vertex> x{u};
        for (std::size_t i = 0; i < xs.size(); ++i) {
          if (xm & (1u << i)) x.insert(x.end(), xs[i].begin(), xs[i].end());
        }
        for (unsigned ym = 1; ym < (1u << ys.size()); ++ym) {
          std::vector<Vertex> y{v};
          for (std::size_t i = 0; i < ys.size(); ++i) {
            if (ym & (1u << i)) y.insert(y.end(), ys[i].begin(), ys[i].end());
          }
          out.emplace_back(g, u, v, x, y);
        }
      }
    }
  }
  return out;
}

Graph shift(const ShiftSpec& spec, ShiftDirection direction) {
  const bool x_to_y = direction == ShiftDirection::XtoY;
  const Vertex from = x_to_y ? spec.u() : spec.v();
  const Vertex to = x_to_y ? spec.v() : spec.u();
  const std::vector<Vertex>& moving = x_to_y ? spec.x_side() : spec.y_side();
  std::vector<Edge> edges = spec.graph().edges();
  for (Edge& e : edges) {
    if (e.u == from && e.v != from && std::binary_search(moving.begin(), moving.end(), e.v)) {
      e.u = to;
    } else if (e.v == from && std::binary_search(moving.begin(), moving.end(), e.u)) {
      e.v = to;
    }
  }
  return rebuild(spec.graph().order(), std::move(edges));
}

std::vector<Edge> nontrivial_bridges(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) < 2 || g.degree(e.v) < 2) continue;
    std::vector<Edge> rest;
    for (const Edge& f : g.edges()) {
      if (f != e) rest.push_back(f);
    }
    if (!is_connected(Graph(g.order(), rest))) out.push_back(e);
  }
  return out;
}

Graph shift_over_bridge(const Graph& g, Edge bridge) {
  const Vertex a = bridge.u;
  const Vertex b = bridge.v;
  if (!g.has_edge(a, b)) {
    throw Error(Errc::NotABridge, vstr(a) + " " + vstr(b) + " is not an edge");
  }
  std::vector<Edge> rest;
  for (const Edge& f : g.edges()) {
    if (f != bridge.normalized()) rest.push_back(f);
  }
  const Graph cut(g.order(), rest);
  const DistanceVector from_a = bfs(cut, a);
  if (from_a.reachable[static_cast<std::size_t>(b)]) {
    throw Error(Errc::NotABridge, vstr(a) + " " + vstr(b) + " lies on a cycle");
  }
  if (g.degree(a) < 2 || g.degree(b) < 2) {
    throw Error(Errc::TrivialBridge, vstr(a) + " " + vstr(b) + " ends at a leaf");
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (e.normalized() == bridge.normalized()) continue;
    if (e.u == a) e.u = b;
    if (e.v == a) e.v = b;
  }
  return rebuild(g.order(), std::move(edges));
}

void check_contraction_preconditions(const UnicyclicGraph& g) {
  const Graph& graph = g.graph();
  if (g.girth() < 4) throw Error(Errc::PreconditionViolated, "girth must be at least 4");
  int max_degree = 0;
  for (Vertex v = 0; v < graph.order(); ++v) max_degree = std::max(max_degree, graph.degree(v));
  if (max_degree < 3) throw Error(Errc::PreconditionViolated, "maximum degree must be at least 3");
  int big = 0;
  for (Vertex x : g.cycle()) {
    const int d = graph.degree(x);
    if (d >= 4) ++big;
    if (d == 2) continue;
    if (d % 2 == 0 || static_cast<int>(leaf_neighbors(graph, x).size()) != d - 2) {
      throw Error(Errc::PreconditionViolated,
                  "cycle vertex " + vstr(x) + " must have degree 2 or odd degree with d-2 leaves");
    }
  }
  if (big > 1) {
    throw Error(Errc::PreconditionViolated, "at most one cycle vertex may have degree >= 4");
  }
  if (g.girth() == 5 && graph.order() <= 7) {
    const RootedTree k1;
    const RootedTree k2 = make_star(1);
    const CanonicalCode code = canonical_code(graph);
    for (const auto& excluded : {HComposition{{k2, k1, k1, k1, k1}},
                                 HComposition{{k2, k1, k1, k2, k1}}}) {
      if (canonical_code(make_H(excluded).graph()) == code) {
        throw Error(Errc::ExcludedConfiguration, "H(K2,K1,K1,K_i,K1) is excluded");
      }
    }
  }
}

std::vector<ContractionChoice> contraction_choices(const UnicyclicGraph& g) {
  const Graph& graph = g.graph();
  const auto cycle = g.cycle();
  const int len = g.girth();
  int top = 0;
  for (Vertex x : cycle) top = std::max(top, graph.degree(x));
  int best_sum = 0;
  for (int i = 0; i < len; ++i) {
    const Vertex u = cycle[static_cast<std::size_t>(i)];
    if (graph.degree(u) != top) continue;
    for (int step : {1, -1}) {
      const Vertex v = cycle[static_cast<std::size_t>((i + step + len) % len)];
      best_sum = std::max(best_sum, top + graph.degree(v));
    }
  }
  std::vector<ContractionChoice> out;
  for (int i = 0; i < len; ++i) {
    const Vertex u = cycle[static_cast<std::size_t>(i)];
    if (graph.degree(u) != top) continue;
    for (int step : {1, -1}) {
      const Vertex v = cycle[static_cast<std::size_t>((i + step + len) % len)];
      if (top + graph.degree(v) == best_sum) out.push_back({u, v});
    }
  }
  return out;
}

ContractionChoice choose_contraction(const UnicyclicGraph& g) {
  return contraction_choices(g).front();
}

UnicyclicGraph contract_and_leaf(const UnicyclicGraph& g, ContractionChoice choice) {
  check_contraction_preconditions(g);
  const auto choices = contraction_choices(g);
  if (std::find(choices.begin(), choices.end(), choice) == choices.end()) {
    throw Error(Errc::PreconditionViolated,
                "edge " + vstr(choice.u) + " " + vstr(choice.v) +
                    " does not maximise d(u) and then d(u)+d(v) on the cycle");
  }
  const Graph& graph = g.graph();
  const Vertex u = choice.u;
  const Vertex v = choice.v;
  std::vector<Edge> edges = graph.edges();
  for (Edge& e : edges) {
    if (e.normalized() == Edge{u, v}.normalized()) continue;
    if (e.u == v) e.u = u;
    if (e.v == v) e.v = u;
  }
  return UnicyclicGraph(rebuild(graph.order(), std::move(edges)));
}

UnicyclicGraph contract_and_leaf(const UnicyclicGraph& g) {
  check_contraction_preconditions(g);
  return contract_and_leaf(g, choose_contraction(g));
}

std::uint64_t cycle_distance_drop(int girth) {
  if (girth < 4) throw Error(Errc::GirthTooSmall, "girth " + std::to_string(girth));
  const std::uint64_t k = static_cast<std::uint64_t>(girth / 2);
  return k * (k - 1) / 2;
}

std::optional<std::vector<Branch>> star_branches(const UnicyclicGraph& g, Vertex center) {
  if (!g.graph().contains(center) || !g.on_cycle(center)) {
    throw Error(Errc::PreconditionViolated, "centre " + vstr(center) + " is not on the cycle");
  }
  const Graph& graph = g.graph();
  std::vector<Branch> out;
  for (Vertex start : graph.neighbors(center)) {
    if (g.on_cycle(start)) continue;
    Branch b{start, 1};
    Vertex prev = center;
    Vertex cur = start;
    while (graph.degree(cur) == 2) {
      const auto nb = graph.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++b.length;
    }
    if (graph.degree(cur) != 1) return std::nullopt;
    out.push_back(b);
  }
  return out;
}

UnicyclicGraph rebalance(const UnicyclicGraph& g, Vertex center, Vertex long_branch,
                         Vertex short_branch) {
  const auto branches = star_branches(g, center);
  if (!branches) {
    throw Error(Errc::NotASubdividedStar, "tree at " + vstr(center) + " is not a subdivided star");
  }
  auto find = [&](Vertex start) {
    auto it = std::find_if(branches->begin(), branches->end(),
                           [&](const Branch& b) { return b.start == start; });
    if (it == branches->end()) {
      throw Error(Errc::PreconditionViolated, vstr(start) + " does not start a branch");
    }
    return *it;
  };
  const Branch longer = find(long_branch);
  const Branch shorter = find(short_branch);
  if (long_branch == short_branch) {
    throw Error(Errc::PreconditionViolated, "branches must differ");
  }
  const int gap = longer.length - shorter.length;
  if (gap >= -1 && gap <= 1) {
    throw Error(Errc::BranchesAlreadyBalanced, "branch lengths differ by at most 1");
  }
  if (gap < 0) throw Error(Errc::PreconditionViolated, "long branch is the shorter one");

  const Graph& graph = g.graph();
  auto walk_to_end = [&](Vertex start) {
    Vertex prev = center;
    Vertex cur = start;
    while (graph.degree(cur) == 2) {
      const auto nb = graph.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    return std::pair{prev, cur};
  };
  const auto [before_end, long_end] = walk_to_end(long_branch);
  const Vertex short_end = walk_to_end(short_branch).second;
  std::vector<Edge> edges = graph.edges();
  replace_edge(edges, {before_end, long_end}, {short_end, long_end});
  return UnicyclicGraph(rebuild(graph.order(), std::move(edges)));
}

std::optional<SabShape> sab_shape(const UnicyclicGraph& g) {
  const Graph& graph = g.graph();
  std::optional<Vertex> center;
  for (Vertex x : g.cycle()) {
    if (graph.degree(x) == 2) continue;
    if (center) return std::nullopt;
    center = x;
  }
  SabShape shape;
  shape.center = center.value_or(g.cycle().front());
  const auto branches = star_branches(g, shape.center);
  if (!branches) return std::nullopt;
  for (const Branch& b : *branches) shape.star.lengths.push_back(b.length);
  std::sort(shape.star.lengths.begin(), shape.star.lengths.end(), std::greater<>{});
  if (!shape.star.almost_balanced()) return std::nullopt;
  return shape;
}

std::vector<OperationAChoice> operation_A_choices(const UnicyclicGraph& g) {
  if (g.girth() < 4) throw Error(Errc::GirthTooSmall, "operation A needs girth >= 4");
  const auto shape = sab_shape(g);
  if (!shape) throw Error(Errc::WrongShape, "graph is not H(SaB(t;b),K1,...,K1)");
  if (shape->star.max_length() > 2) throw Error(Errc::WrongShape, "branches longer than 2");
  const Vertex u = shape->center;
  const std::vector<Vertex> leaves = leaf_neighbors(g.graph(), u);
  if (leaves.empty()) throw Error(Errc::NoLeafNeighbor, "centre " + vstr(u) + " has no leaf");
  std::vector<OperationAChoice> out;
  for (Vertex merged : cycle_neighbors(g, u)) {
    for (Vertex leaf : leaves) out.push_back({merged, leaf});
  }
  return out;
}

UnicyclicGraph operation_A(const UnicyclicGraph& g, OperationAChoice choice) {
  const auto choices = operation_A_choices(g);
  if (std::find(choices.begin(), choices.end(), choice) == choices.end()) {
    throw Error(Errc::PreconditionViolated, "merged vertex must be a cycle neighbour of the "
                                            "centre and leaf a leaf neighbour of it");
  }
  const Graph& graph = g.graph();
  const Vertex u = sab_shape(g)->center;
  const Vertex merged = choice.merged;
  const auto around = cycle_neighbors(g, merged);
  const Vertex beyond = around[0] == u ? around[1] : around[0];
  std::vector<Edge> edges = graph.edges();
  replace_edge(edges, {merged, beyond}, {u, beyond});
  replace_edge(edges, {u, merged}, {choice.leaf, merged});
  return UnicyclicGraph(rebuild(graph.order(), std::move(edges)));
}

UnicyclicGraph operation_A(const UnicyclicGraph& g) {
  return operation_A(g, operation_A_choices(g).front());
}

Rational operation_A_delta_closed(int girth, int tree_size) {
  if (girth < 4) throw Error(Errc::GirthTooSmall, "girth " + std::to_string(girth));
  if (tree_size < 1) throw Error(Errc::InvalidSpec, "tree needs at least one vertex");
  const std::int64_t k = girth / 2;
  const std::int64_t tail = girth % 2 == 0 ? 6 : 4;
  return Rational(k * k, 2) - Rational(9 * k, 2) + Rational((k - 2) * tree_size + tail);
}

}  // namespace uniwiener
