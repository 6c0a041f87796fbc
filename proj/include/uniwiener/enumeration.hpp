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

#ifndef UNIWIENER_ENUMERATION_HPP_
#define UNIWIENER_ENUMERATION_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uniwiener/canonical.hpp"
#include "uniwiener/graph.hpp"
#include "uniwiener/rooted_tree.hpp"

namespace uniwiener {

// Default n bound for exhaustive theorem checks.
inline constexpr int kDefaultEnumerationBound = 11;

// One isomorphism class: its code and the graph in canonical labelling.
struct CodedGraph {
  CanonicalCode code;
  UnicyclicGraph graph;
};

// Rooted trees on `size` vertices, one per isomorphism class, generated as
// canonical level sequences (Beyer-Hedetniemi order). Cached; thread-safe.
const std::vector<RootedTree>& rooted_trees(int size);

// One representative per isomorphism class of unicyclic graphs on n vertices,
// ascending canonical code. Orderly generation: rooted trees are laid around
// each cycle length and a sequence is kept only if it is the smallest of its
// dihedral images. Jobs are (girth, size of first tree) pairs run on an
// OpenMP team of `jobs` threads (<= 0: OpenMP default). Output does not
// depend on `jobs`.
std::vector<CodedGraph> enumerate_unicyclic(int n, int jobs = 0);

// Serial reference: every tree assignment around every cycle length, collapsed
// by canonical code. No orderly pruning.
std::vector<CodedGraph> enumerate_unicyclic_serial(int n);

// Independent slow oracle: filter all n-edge labelled graphs on n vertices for
// connectivity, collapse by canonical code. Throws TooLarge for n > 9.
std::vector<CodedGraph> enumerate_labeled_oracle(int n);

struct ClassSummary {
  ClassKey key;
  std::size_t count = 0;           // isomorphism classes in U_{n,r}
  std::uint64_t min_wiener = 0;
  std::vector<CodedGraph> minimizers;  // ascending code
};

// Every nonempty class on n vertices, ascending r.
std::vector<ClassSummary> classify(int n, int jobs = 0);

// Serial reference for classify.
std::vector<ClassSummary> classify_serial(int n);

// Throws InvalidClassKey for n < 3 or r outside [0, n]; EmptyClass when no
// unicyclic graph realises (n, r), parity included.
ClassSummary min_wiener(ClassKey key, int jobs = 0);

}  // namespace uniwiener

#endif  // UNIWIENER_ENUMERATION_HPP_
