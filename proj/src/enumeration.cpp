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

#include "uniwiener/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include <omp.h>

#include "uniwiener/constructors.hpp"
#include "uniwiener/error.hpp"

namespace uniwiener {

namespace {

// All rooted trees of sizes 1..max_size with global ids ordered by
// (size, generation index).
struct TreeCatalog {
  std::vector<const RootedTree*> tree;
  std::vector<int> size;
  std::vector<int> first_of_size;  // first id of each size; index max_size+1 is the end

  explicit TreeCatalog(int max_size) : first_of_size(static_cast<std::size_t>(max_size) + 2, 0) {
    for (int s = 1; s <= max_size; ++s) {
      first_of_size[static_cast<std::size_t>(s)] = static_cast<int>(tree.size());
      for (const RootedTree& t : rooted_trees(s)) {
        tree.push_back(&t);
        size.push_back(s);
      }
    }
    first_of_size[static_cast<std::size_t>(max_size) + 1] = static_cast<int>(tree.size());
  }
};

CodedGraph coded(const HComposition& spec) {
  const UnicyclicGraph g = make_H(spec);
  CodedGraph out{canonical_code(g.graph()), UnicyclicGraph(canonical_form(g.graph()))};
  return out;
}

HComposition compose(const TreeCatalog& catalog, const std::vector<int>& ids) {
  HComposition spec;
  spec.trees.reserve(ids.size());
  for (int id : ids) spec.trees.push_back(*catalog.tree[static_cast<std::size_t>(id)]);
  return spec;
}

// True when no rotation or reflection of `ids` is lexicographically smaller.
bool dihedral_minimal(const std::vector<int>& ids) {
  const int len = static_cast<int>(ids.size());
  for (int start = 0; start < len; ++start) {
    for (int dir : {1, -1}) {
      if (start == 0 && dir == 1) continue;
      for (int i = 0; i < len; ++i) {
        const int j = ((start + dir * i) % len + len) % len;
        const int a = ids[static_cast<std::size_t>(j)];
        const int b = ids[static_cast<std::size_t>(i)];
        if (a != b) {
          if (a < b) return false;
          break;
        }
      }
    }
  }
  return true;
}

struct Job {
  int girth;
  int first_size;
};

class OrderlyJob {
 public:
  OrderlyJob(const TreeCatalog& catalog, int n, Job job)
      : catalog_(catalog), n_(n), job_(job), ids_(static_cast<std::size_t>(job.girth)) {}

  std::vector<CodedGraph> run() {
    const int extra = n_ - job_.girth;
    const int s0 = job_.first_size;
    for (int t0 = catalog_.first_of_size[static_cast<std::size_t>(s0)];
         t0 < catalog_.first_of_size[static_cast<std::size_t>(s0) + 1]; ++t0) {
      ids_[0] = t0;
      fill(1, extra - (s0 - 1));
    }
    return std::move(out_);
  }

 private:
  // Positions >= pos still need at least first_size - 1 extra vertices each.
  void fill(int pos, int remaining) {
    const int g = job_.girth;
    const int s0 = job_.first_size;
    if (pos == g) {
      if (remaining == 0 && dihedral_minimal(ids_)) out_.push_back(coded(compose(catalog_, ids_)));
      return;
    }
    const int later = g - pos - 1;
    for (int s = s0; s - 1 <= remaining; ++s) {
      if (remaining - (s - 1) < later * (s0 - 1)) break;
      if (pos == g - 1 && s - 1 != remaining) continue;
      int first = catalog_.first_of_size[static_cast<std::size_t>(s)];
      if (s == s0) first = std::max(first, ids_[0]);
      for (int id = first; id < catalog_.first_of_size[static_cast<std::size_t>(s) + 1]; ++id) {
        ids_[static_cast<std::size_t>(pos)] = id;
        fill(pos + 1, remaining - (s - 1));
      }
    }
  }

  const TreeCatalog& catalog_;
  int n_;
  Job job_;
  std::vector<int> ids_;
  std::vector<CodedGraph> out_;
};

void sort_by_code(std::vector<CodedGraph>& graphs) {
  std::sort(graphs.begin(), graphs.end(),
            [](const CodedGraph& a, const CodedGraph& b) { return a.code < b.code; });
  graphs.erase(std::unique(graphs.begin(), graphs.end(),
                           [](const CodedGraph& a, const CodedGraph& b) {
                             return a.code == b.code;
                           }),
               graphs.end());
}

int team_size(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

void require_order(int n) {
  if (n < 3) throw Error(Errc::InvalidSpec, "unicyclic graphs need n >= 3");
}

}  // namespace

std::vector<CodedGraph> enumerate_unicyclic(int n, int jobs) {
  require_order(n);
  const TreeCatalog catalog(n - 2);
  std::vector<Job> work;
  for (int g = 3; g <= n; ++g) {
    for (int s0 = 1; g * (s0 - 1) <= n - g; ++s0) work.push_back({g, s0});
  }
  std::vector<std::vector<CodedGraph>> results(work.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(team_size(jobs))
  for (std::size_t j = 0; j < work.size(); ++j) {
    results[j] = OrderlyJob(catalog, n, work[j]).run();
  }
  std::vector<CodedGraph> merged;
  for (auto& part : results) {
    std::move(part.begin(), part.end(), std::back_inserter(merged));
  }
  sort_by_code(merged);
  return merged;
}

std::vector<CodedGraph> enumerate_unicyclic_serial(int n) {
  require_order(n);
  const TreeCatalog catalog(n - 2);
  std::map<CanonicalCode, UnicyclicGraph> unique;
  for (int g = 3; g <= n; ++g) {
    std::vector<int> ids(static_cast<std::size_t>(g));
    auto assign = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == g) {
        if (remaining != 0) return;
        CodedGraph c = coded(compose(catalog, ids));
        unique.emplace(std::move(c.code), std::move(c.graph));
        return;
      }
      for (int id = 0; id < static_cast<int>(catalog.tree.size()); ++id) {
        const int s = catalog.size[static_cast<std::size_t>(id)];
        if (s - 1 > remaining) break;
        ids[static_cast<std::size_t>(pos)] = id;
        self(self, pos + 1, remaining - (s - 1));
      }
    };
    assign(assign, 0, n - g);
  }
  std::vector<CodedGraph> out;
  for (auto& [code, g] : unique) out.push_back({code, std::move(g)});
  return out;
}

std::vector<CodedGraph> enumerate_labeled_oracle(int n) {
  require_order(n);
  if (n > 9) throw Error(Errc::TooLarge, "labelled oracle is limited to n <= 9");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const int total = static_cast<int>(pairs.size());
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::iota(pick.begin(), pick.end(), 0);
  std::map<CanonicalCode, UnicyclicGraph> unique;
  std::vector<int> root(static_cast<std::size_t>(n));
  auto find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<Edge> edges(static_cast<std::size_t>(n));
  while (true) {
    std::iota(root.begin(), root.end(), 0);
    int merges = 0;
    for (int i = 0; i < n; ++i) {
      const Edge e = pairs[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
      edges[static_cast<std::size_t>(i)] = e;
      const int a = find(e.u);
      const int b = find(e.v);
      if (a != b) {
        root[static_cast<std::size_t>(a)] = b;
        ++merges;
      }
    }
    if (merges == n - 1) {
      const Graph g(n, edges);
      unique.try_emplace(canonical_code(g), UnicyclicGraph(canonical_form(g)));
    }
    // Next n-combination of [0, total).
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - n + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  std::vector<CodedGraph> out;
  for (auto& [code, g] : unique) out.push_back({code, std::move(g)});
  return out;
}

namespace {

std::vector<ClassSummary> summarize(const std::vector<CodedGraph>& graphs,
                                    const std::vector<std::uint64_t>& w,
                                    const std::vector<int>& r, int n) {
  std::map<int, ClassSummary> by_r;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto [it, fresh] = by_r.try_emplace(r[i]);
    ClassSummary& s = it->second;
    if (fresh) {
      s.key = {n, r[i]};
      s.min_wiener = w[i];
    }
    ++s.count;
    if (w[i] < s.min_wiener) {
      s.min_wiener = w[i];
      s.minimizers.clear();
    }
    if (w[i] == s.min_wiener) s.minimizers.push_back(graphs[i]);
  }
  std::vector<ClassSummary> out;
  for (auto& [key, s] : by_r) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::vector<ClassSummary> classify(int n, int jobs) {
  const std::vector<CodedGraph> graphs = enumerate_unicyclic(n, jobs);
  std::vector<std::uint64_t> w(graphs.size());
  std::vector<int> r(graphs.size());
#pragma omp parallel for schedule(static) num_threads(team_size(jobs))
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    w[i] = wiener(graphs[i].graph.graph());
    r[i] = even_degree_count(graphs[i].graph.graph());
  }
  return summarize(graphs, w, r, n);
}

std::vector<ClassSummary> classify_serial(int n) {
  const std::vector<CodedGraph> graphs = enumerate_unicyclic_serial(n);
  std::vector<std::uint64_t> w;
  std::vector<int> r;
  for (const auto& g : graphs) {
    w.push_back(wiener(g.graph.graph()));
    r.push_back(even_degree_count(g.graph.graph()));
  }
  return summarize(graphs, w, r, n);
}

ClassSummary min_wiener(ClassKey key, int jobs) {
  const std::string name = "(" + std::to_string(key.n) + "," + std::to_string(key.r) + ")";
  if (key.n < 3 || key.r < 0 || key.r > key.n) throw Error(Errc::InvalidClassKey, name);
  if ((key.n - key.r) % 2 != 0) {
    throw Error(Errc::EmptyClass, name + ": n - r must be even");
  }
  for (ClassSummary& s : classify(key.n, jobs)) {
    if (s.key == key) return std::move(s);
  }
  throw Error(Errc::EmptyClass, name + " has no unicyclic graph");
}

}  // namespace uniwiener
