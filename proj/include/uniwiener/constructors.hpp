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

#ifndef UNIWIENER_CONSTRUCTORS_HPP_
#define UNIWIENER_CONSTRUCTORS_HPP_

#include <vector>

#include "uniwiener/graph.hpp"
#include "uniwiener/rooted_tree.hpp"

namespace uniwiener {

UnicyclicGraph make_cycle(int girth);
Graph make_path(int edges);
// SB(1;b) rooted at its centre; make_star(0) is K_1, make_star(1) is K_2.
RootedTree make_star(int leaves);

// SaB(t;b) with t = ceil(m/b): (m mod b) branches of length ceil(m/b) and the
// rest floor(m/b). Balanced exactly when b divides m. Throws InvalidSpec for
// b < 1 and TooFewVertices for m < b.
RootedTree make_sab(int branches, int edges);

// H(T_1, ..., T_g): tree i is hung on cycle vertex i.
struct HComposition {
  std::vector<RootedTree> trees;

  int girth() const noexcept { return static_cast<int>(trees.size()); }
  int order() const noexcept;
};

// Cycle vertices get labels 0..g-1 in order; non-root tree vertices follow,
// tree by tree, in each tree's own vertex order. Throws GirthTooSmall.
UnicyclicGraph make_H(const HComposition& spec);

// Inverse of make_H up to relabelling, following g.cycle() order.
HComposition decompose(const UnicyclicGraph& g);

// Graphs of U_{n,r} with the necessary shapes of minimisers:
//   r <= 2: H(SB(1;b1), X1, X2), b1 odd, X_j in {K1, K2};
//   r >= 3: H(K2,K1,K1,K1,K1) and H(SaB(t;b2), K1, ..., K1), b2 = n - r,
//           over every girth that fits.
// Deduplicated up to isomorphism, ascending canonical code. Throws
// InvalidClassKey.
std::vector<UnicyclicGraph> theorem1_family(ClassKey key);

// The complete list of minimisers claimed for r <= (n+3)/2:
//   r <= 2: as above;
//   H(K2,K1,K1,K1,K1) when it lies in the class;
//   H(SB(1;b), K1, K1), H(SB(1;b), K1, K1, K1) and
//   H(SaB(t;b), K1, K1, K1, K1) with t <= 2, all with b = n - r even.
// Throws InvalidClassKey, ClassKeyOutOfTheoremRange.
std::vector<UnicyclicGraph> theorem2_family(ClassKey key);

}  // namespace uniwiener

#endif  // UNIWIENER_CONSTRUCTORS_HPP_
