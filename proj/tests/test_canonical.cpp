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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "uniwiener/canonical.hpp"
#include "uniwiener/constructors.hpp"
#include "uniwiener/enumeration.hpp"
#include "uniwiener/error.hpp"

namespace uniwiener {
namespace {

TEST(Canonical, CycleUnderAnyLabelling) {
  std::mt19937 rng(4);
  const Graph c4 = make_cycle(4).graph();
  const CanonicalCode code = canonical_code(c4);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(canonical_code(oracle::permuted(c4, oracle::random_permutation(4, rng))), code);
  }
}

TEST(Canonical, LeavesOnDifferentTriangleVertices) {
  const Graph a(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
  const Graph b(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {2, 4}});
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  const Graph c(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}});
  EXPECT_NE(canonical_code(a), canonical_code(c));
}

TEST(Canonical, FormIsIsomorphicAndIdempotent) {
  std::mt19937 rng(11);
  for (const CodedGraph& c : enumerate_unicyclic(7)) {
    const Graph g = oracle::permuted(c.graph.graph(), oracle::random_permutation(7, rng));
    const Graph form = canonical_form(g);
    EXPECT_EQ(form, c.graph.graph());
    EXPECT_EQ(canonical_form(form), form);
    EXPECT_TRUE(oracle::isomorphic(g, form));
  }
}

TEST(Canonical, TreesAreSupported) {
  const Graph p = make_path(5);
  std::mt19937 rng(3);
  EXPECT_EQ(canonical_code(oracle::permuted(p, oracle::random_permutation(6, rng))),
            canonical_code(p));
  EXPECT_NE(canonical_code(p), canonical_code(make_star(5).to_graph()));
}

TEST(Canonical, Errors) {
  EXPECT_THROW(canonical_code(Graph(4, {{0, 1}, {2, 3}})), Error);
  const Graph two_cycles(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  try {
    canonical_code(two_cycles);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Unsupported);
  }
}

// Equal codes exactly when the permutation oracle finds an isomorphism.
TEST(Canonical, AgreesWithPermutationOracle) {
  std::mt19937 rng(99);
  std::vector<Graph> pool;
  for (int n = 3; n <= 7; ++n) {
    for (const CodedGraph& c : enumerate_unicyclic_serial(n)) {
      pool.push_back(oracle::permuted(c.graph.graph(), oracle::random_permutation(n, rng)));
    }
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[i].order() != pool[j].order()) continue;
      EXPECT_EQ(canonical_code(pool[i]) == canonical_code(pool[j]),
                oracle::isomorphic(pool[i], pool[j]));
    }
  }
}

TEST(Canonical, HexIsStable) {
  EXPECT_EQ(canonical_code(make_cycle(3).graph()).hex(), canonical_code(make_cycle(3).graph()).hex());
  EXPECT_EQ(canonical_code(make_cycle(3).graph()).hex().size() % 2, 0u);
}

}  // namespace
}  // namespace uniwiener
