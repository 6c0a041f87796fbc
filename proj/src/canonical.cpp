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

#include "uniwiener/canonical.hpp"

#include <algorithm>
#include <string>

#include "uniwiener/error.hpp"

namespace uniwiener {

namespace {

// AHU codes for the trees hanging off `blocked` vertices (or for a whole tree
// when nothing is blocked). Children exclude the parent and blocked vertices.
class TreeCoder {
 public:
  TreeCoder(const Graph& g, const std::vector<char>& blocked)
      : g_(g), blocked_(blocked),
        codes_(static_cast<std::size_t>(g.order())),
        kids_(static_cast<std::size_t>(g.order())) {}

  const std::string& encode(Vertex root) {
    visit(root, -1);
    return codes_[static_cast<std::size_t>(root)];
  }

  // Preorder from root, children in ascending code order; appends to `out`.
  void preorder(Vertex root, std::vector<Vertex>& out) const {
    out.push_back(root);
    for (Vertex c : kids_[static_cast<std::size_t>(root)]) preorder(c, out);
  }

 private:
  void visit(Vertex v, Vertex parent) {
    auto& kids = kids_[static_cast<std::size_t>(v)];
    kids.clear();
    for (Vertex w : g_.neighbors(v)) {
      if (w == parent || blocked_[static_cast<std::size_t>(w)]) continue;
      visit(w, v);
      kids.push_back(w);
    }
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
      return codes_[static_cast<std::size_t>(a)] < codes_[static_cast<std::size_t>(b)];
    });
    std::string& code = codes_[static_cast<std::size_t>(v)];
    code.assign(1, '(');
    for (Vertex c : kids) code += codes_[static_cast<std::size_t>(c)];
    code += ')';
  }

  const Graph& g_;
  const std::vector<char>& blocked_;
  std::vector<std::string> codes_;
  std::vector<std::vector<Vertex>> kids_;
};

std::vector<Vertex> walk_cycle(const Graph& g, const std::vector<Vertex>& core,
                               const std::vector<char>& on_core) {
  std::vector<Vertex> cycle{core.front()};
  Vertex prev = -1;
  Vertex cur = core.front();
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (on_core[static_cast<std::size_t>(w)] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == core.front()) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

std::vector<Vertex> unicyclic_order(const Graph& g) {
  const int n = g.order();
  const std::vector<Vertex> core = two_core(g);
  std::vector<char> on_core(static_cast<std::size_t>(n), 0);
  for (Vertex v : core) on_core[static_cast<std::size_t>(v)] = 1;
  const std::vector<Vertex> cycle = walk_cycle(g, core, on_core);
  const int len = static_cast<int>(cycle.size());

  TreeCoder coder(g, on_core);
  std::vector<const std::string*> seq(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) seq[i] = &coder.encode(cycle[i]);

  auto at = [&](int start, int dir, int i) {
    return ((start + dir * i) % len + len) % len;
  };
  int best_start = 0;
  int best_dir = 1;
  for (int start = 0; start < len; ++start) {
    for (int dir : {1, -1}) {
      for (int i = 0; i < len; ++i) {
        const std::string& a = *seq[static_cast<std::size_t>(at(start, dir, i))];
        const std::string& b = *seq[static_cast<std::size_t>(at(best_start, best_dir, i))];
        if (a != b) {
          if (a < b) {
            best_start = start;
            best_dir = dir;
          }
          break;
        }
      }
    }
  }

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < len; ++i) order.push_back(cycle[static_cast<std::size_t>(at(best_start, best_dir, i))]);
  for (int i = 0; i < len; ++i) {
    std::vector<Vertex> tree;
    coder.preorder(order[static_cast<std::size_t>(i)], tree);
    order.insert(order.end(), tree.begin() + 1, tree.end());
  }
  return order;
}

std::vector<Vertex> tree_order(const Graph& g) {
  const int n = g.order();
  // Peel leaves layer by layer; the last layer holds one or two centres.
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : g.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  const std::vector<char> none(static_cast<std::size_t>(n), 0);
  TreeCoder coder(g, none);
  Vertex root = layer.front();
  if (layer.size() == 2) {
    const std::string a = coder.encode(layer[0]);
    const std::string b = coder.encode(layer[1]);
    root = b < a ? layer[1] : layer[0];
  }
  coder.encode(root);
  std::vector<Vertex> order;
  coder.preorder(root, order);
  return order;
}

void put16(std::vector<std::uint8_t>& out, int value) {
  out.push_back(static_cast<std::uint8_t>((value >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(value & 0xff));
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xf];
  }
  return out;
}

std::vector<Vertex> canonical_labeling(const Graph& g) {
  const int n = g.order();
  if (n > 65535) throw Error(Errc::TooLarge, "canonical codes use 16-bit vertex ids");
  if (n == 0) return {};
  if (!is_connected(g)) throw Error(Errc::NotConnected, "canonical code needs a connected graph");
  if (g.size() > static_cast<std::size_t>(n)) {
    throw Error(Errc::Unsupported, "canonical code covers graphs with at most one cycle");
  }
  const std::vector<Vertex> order = g.size() == static_cast<std::size_t>(n) ? unicyclic_order(g)
                                                                           : tree_order(g);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) {
    perm[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  }
  return perm;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    e = Edge{perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]}.normalized();
  }
  return Graph(g.order(), edges);
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

CanonicalCode canonical_code(const Graph& g) {
  const Graph c = canonical_form(g);
  CanonicalCode code;
  code.bytes.reserve(4 + 4 * c.size());
  put16(code.bytes, c.order());
  put16(code.bytes, static_cast<int>(c.size()));
  for (const Edge& e : c.edges()) {
    put16(code.bytes, e.u);
    put16(code.bytes, e.v);
  }
  return code;
}

}  // namespace uniwiener
