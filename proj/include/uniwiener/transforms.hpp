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

#ifndef UNIWIENER_TRANSFORMS_HPP_
#define UNIWIENER_TRANSFORMS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "uniwiener/graph.hpp"
#include "uniwiener/rooted_tree.hpp"

namespace uniwiener {

// ---------------------------------------------------------------------------
// Moving a part across two cut vertices.

enum class ShiftDirection { XtoY, YtoX };

// A connected graph split as X + H + Y where X and H share only u and Y and H
// share only v. X \ {u} touches nothing outside X; likewise Y \ {v}.
class ShiftSpec {
 public:
  // x_side contains u, y_side contains v; H is everything else plus u and v.
  // Throws InvalidPartition, or TrivialPart when X or Y is a single vertex.
  ShiftSpec(Graph graph, Vertex u, Vertex v, std::vector<Vertex> x_side,
            std::vector<Vertex> y_side);

  const Graph& graph() const noexcept { return graph_; }
  Vertex u() const noexcept { return u_; }
  Vertex v() const noexcept { return v_; }
  // Ascending.
  const std::vector<Vertex>& x_side() const noexcept { return x_; }
  const std::vector<Vertex>& y_side() const noexcept { return y_; }

 private:
  Graph graph_;
  Vertex u_;
  Vertex v_;
  std::vector<Vertex> x_;
  std::vector<Vertex> y_;
};

// Every decomposition with nontrivial X and Y, where X \ {u} is a nonempty
// union of components of G - u avoiding v (and Y likewise), each unordered
// pair {u, v} taken once with u < v.
std::vector<ShiftSpec> shift_specs(const Graph& g);

// G_{X->Y} re-attaches X at v; G_{Y->X} re-attaches Y at u. Labels are kept.
Graph shift(const ShiftSpec& spec, ShiftDirection direction);

// G_{X->Y} for H = the bridge uv: everything hanging at u other than the
// bridge moves to v, leaving u a leaf. Throws NotABridge, TrivialBridge.
Graph shift_over_bridge(const Graph& g, Edge bridge);

// Bridges whose endpoints both have degree >= 2.
std::vector<Edge> nontrivial_bridges(const Graph& g);

// ---------------------------------------------------------------------------
// Shortening the cycle.

struct ContractionChoice {
  Vertex u = 0;  // maximum cycle degree
  Vertex v = 0;  // cycle neighbour maximising d(u) + d(v)
  friend bool operator==(const ContractionChoice&, const ContractionChoice&) = default;
};

// Throws PreconditionViolated (naming the failed clause) or
// ExcludedConfiguration for H(K2,K1,K1,K_i,K1), i in {1,2}.
void check_contraction_preconditions(const UnicyclicGraph& g);

// All edges uv of the cycle satisfying the selection rules, in cycle order.
std::vector<ContractionChoice> contraction_choices(const UnicyclicGraph& g);

// First of contraction_choices (lowest position in cycle order).
ContractionChoice choose_contraction(const UnicyclicGraph& g);

// Contract uv on the cycle and add a leaf at u. The contracted vertex v keeps
// its label and becomes that leaf; v's leaves move to u.
UnicyclicGraph contract_and_leaf(const UnicyclicGraph& g, ContractionChoice choice);
UnicyclicGraph contract_and_leaf(const UnicyclicGraph& g);

// k(k-1)/2 with k = floor(g/2): total pair-distance loss among u_2..u_g when
// C_g shrinks to C_{g-1}. Throws GirthTooSmall for g < 4.
std::uint64_t cycle_distance_drop(int girth);

// ---------------------------------------------------------------------------
// Subdivided-star reshaping.

// Ids of branches are the centre's neighbours where they start. Moves the end
// vertex of the long branch to the end of the short one. Throws
// NotASubdividedStar, BranchesAlreadyBalanced, PreconditionViolated.
UnicyclicGraph rebalance(const UnicyclicGraph& g, Vertex center, Vertex long_branch,
                         Vertex short_branch);

// Branch start vertex and length, for T_center a subdivided star.
struct Branch {
  Vertex start = 0;
  int length = 0;
};
std::optional<std::vector<Branch>> star_branches(const UnicyclicGraph& g, Vertex center);

// H(SaB_u(t;b), K1, ..., K1): at most one cycle vertex carries a nontrivial
// tree, which is an almost balanced subdivided star.
struct SabShape {
  Vertex center = 0;
  SubdividedStarSpec star;
};
std::optional<SabShape> sab_shape(const UnicyclicGraph& g);

struct OperationAChoice {
  Vertex merged = 0;  // cycle neighbour of u identified with u
  Vertex leaf = 0;    // leaf neighbour of u that receives a new pendant
  friend bool operator==(const OperationAChoice&, const OperationAChoice&) = default;
};

// Valid (merged, leaf) pairs, ascending. Throws GirthTooSmall, WrongShape
// (including t > 2), NoLeafNeighbor.
std::vector<OperationAChoice> operation_A_choices(const UnicyclicGraph& g);

// G_A: identify the merged cycle neighbour with u and hang a new leaf on the
// chosen leaf. The merged vertex's label is reused for the new leaf.
UnicyclicGraph operation_A(const UnicyclicGraph& g, OperationAChoice choice);
// Smallest merged vertex and smallest leaf.
UnicyclicGraph operation_A(const UnicyclicGraph& g);

using Rational = boost::rational<std::int64_t>;

// Closed form for W(G) - W(G_A) with T = SaB_u(t;b), |T| = tree_size vertices:
//   k^2/2 - 9k/2 + (k-2)|T| + 6   for g = 2k,
//   k^2/2 - 9k/2 + (k-2)|T| + 4   for g = 2k+1.
Rational operation_A_delta_closed(int girth, int tree_size);

}  // namespace uniwiener

#endif  // UNIWIENER_TRANSFORMS_HPP_
