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

#ifndef UNIWIENER_ROOTED_TREE_HPP_
#define UNIWIENER_ROOTED_TREE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uniwiener/graph.hpp"

namespace uniwiener {

// Tree with a distinguished root, stored as a parent array (parent[root] ==
// root). These are the T_u hung on cycle vertices.
class RootedTree {
 public:
  // K_1.
  RootedTree() : parent_{0} {}

  // Throws InvalidSpec unless `parent` describes one connected, acyclic tree
  // with exactly one root.
  static RootedTree from_parents(std::vector<Vertex> parent);

  // Depth sequence in preorder with the root at depth 0, e.g. {0,1,2,1}.
  static RootedTree from_levels(std::span<const int> levels);

  int size() const noexcept { return static_cast<int>(parent_.size()); }
  Vertex root() const noexcept { return root_; }
  Vertex parent(Vertex v) const { return parent_.at(static_cast<std::size_t>(v)); }
  std::span<const Vertex> parents() const noexcept { return parent_; }

  std::vector<std::vector<Vertex>> children() const;
  Graph to_graph() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<Vertex> parent_;
  Vertex root_ = 0;
};

// Canonical rooted-tree string: "(" + sorted child codes + ")". Equal iff the
// rooted trees are isomorphic.
std::string rooted_code(const RootedTree& tree);

// Branch lengths of a subdivided star, nonincreasing. b = 0 is K_1.
struct SubdividedStarSpec {
  std::vector<int> lengths;

  int branches() const noexcept { return static_cast<int>(lengths.size()); }
  int edges() const noexcept;
  bool balanced() const noexcept;
  bool almost_balanced() const noexcept;
  // Longest branch length (the t of SaB(t;b)); 0 for K_1.
  int max_length() const noexcept { return lengths.empty() ? 0 : lengths.front(); }
};

// Throws InvalidSpec if lengths are not nonincreasing or contain a zero.
RootedTree make_subdivided_star(const SubdividedStarSpec& spec);

// The branch lengths if every non-root vertex has at most one child.
std::optional<SubdividedStarSpec> as_subdivided_star(const RootedTree& tree);

}  // namespace uniwiener

#endif  // UNIWIENER_ROOTED_TREE_HPP_
