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

#include "uniwiener/rooted_tree.hpp"

#include <algorithm>
#include <functional>

#include "uniwiener/error.hpp"

namespace uniwiener {

RootedTree RootedTree::from_parents(std::vector<Vertex> parent) {
  const int n = static_cast<int>(parent.size());
  if (n == 0) throw Error(Errc::InvalidSpec, "empty rooted tree");
  int roots = 0;
  Vertex root = 0;
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = parent[static_cast<std::size_t>(v)];
    if (p < 0 || p >= n) throw Error(Errc::InvalidSpec, "parent out of range");
    if (p == v) {
      ++roots;
      root = v;
    }
  }
  if (roots != 1) throw Error(Errc::InvalidSpec, "rooted tree needs exactly one root");
  // Every vertex must reach the root without revisiting.
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on path, 2 done
  state[static_cast<std::size_t>(root)] = 2;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> path;
    Vertex x = v;
    while (state[static_cast<std::size_t>(x)] == 0) {
      state[static_cast<std::size_t>(x)] = 1;
      path.push_back(x);
      x = parent[static_cast<std::size_t>(x)];
    }
    if (state[static_cast<std::size_t>(x)] == 1) throw Error(Errc::InvalidSpec, "parent cycle");
    for (Vertex y : path) state[static_cast<std::size_t>(y)] = 2;
  }
  RootedTree t;
  t.parent_ = std::move(parent);
  t.root_ = root;
  return t;
}

RootedTree RootedTree::from_levels(std::span<const int> levels) {
  if (levels.empty() || levels.front() != 0) {
    throw Error(Errc::InvalidSpec, "level sequence must start at depth 0");
  }
  std::vector<Vertex> parent(levels.size());
  std::vector<Vertex> last_at_depth{0};
  parent[0] = 0;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int d = levels[i];
    if (d < 1 || d > static_cast<int>(last_at_depth.size())) {
      throw Error(Errc::InvalidSpec, "level sequence jumps");
    }
    parent[i] = last_at_depth[static_cast<std::size_t>(d - 1)];
    last_at_depth.resize(static_cast<std::size_t>(d));
    last_at_depth.push_back(static_cast<Vertex>(i));
  }
  return from_parents(std::move(parent));
}

std::vector<std::vector<Vertex>> RootedTree::children() const {
  std::vector<std::vector<Vertex>> out(parent_.size());
  for (Vertex v = 0; v < size(); ++v) {
    if (v != root_) out[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])].push_back(v);
  }
  return out;
}

Graph RootedTree::to_graph() const {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < size(); ++v) {
    if (v != root_) edges.push_back({parent_[static_cast<std::size_t>(v)], v});
  }
  return Graph(size(), edges);
}

std::string rooted_code(const RootedTree& tree) {
  const auto kids = tree.children();
  std::function<std::string(Vertex)> code = [&](Vertex v) {
    std::vector<std::string> parts;
    for (Vertex c : kids[static_cast<std::size_t>(v)]) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ')';
    return out;
  };
  return code(tree.root());
}

int SubdividedStarSpec::edges() const noexcept {
  int total = 0;
  for (int l : lengths) total += l;
  return total;
}

bool SubdividedStarSpec::balanced() const noexcept {
  return std::adjacent_find(lengths.begin(), lengths.end(), std::not_equal_to<>{}) ==
         lengths.end();
}

bool SubdividedStarSpec::almost_balanced() const noexcept {
  if (lengths.empty()) return true;
  return lengths.front() - lengths.back() <= 1;
}

RootedTree make_subdivided_star(const SubdividedStarSpec& spec) {
  if (!std::is_sorted(spec.lengths.begin(), spec.lengths.end(), std::greater<>{})) {
    throw Error(Errc::InvalidSpec, "branch lengths must be nonincreasing");
  }
  std::vector<Vertex> parent{0};
  for (int len : spec.lengths) {
    if (len < 1) throw Error(Errc::InvalidSpec, "branch length must be at least 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      const Vertex v = static_cast<Vertex>(parent.size());
      parent.push_back(prev);
      prev = v;
    }
  }
  return RootedTree::from_parents(std::move(parent));
}

std::optional<SubdividedStarSpec> as_subdivided_star(const RootedTree& tree) {
  const auto kids = tree.children();
  SubdividedStarSpec spec;
  for (Vertex start : kids[static_cast<std::size_t>(tree.root())]) {
    int len = 1;
    Vertex v = start;
    while (!kids[static_cast<std::size_t>(v)].empty()) {
      if (kids[static_cast<std::size_t>(v)].size() > 1) return std::nullopt;
      v = kids[static_cast<std::size_t>(v)].front();
      ++len;
    }
    spec.lengths.push_back(len);
  }
  std::sort(spec.lengths.begin(), spec.lengths.end(), std::greater<>{});
  return spec;
}

}  // namespace uniwiener
