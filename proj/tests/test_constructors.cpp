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

#include "oracles.hpp"
#include "uniwiener/canonical.hpp"
#include "uniwiener/constructors.hpp"
#include "uniwiener/error.hpp"

namespace uniwiener {
namespace {

const RootedTree kK1;
const RootedTree kK2 = make_star(1);

bool contains_iso(const std::vector<UnicyclicGraph>& family, const UnicyclicGraph& g) {
  for (const auto& f : family) {
    if (canonical_code(f.graph()) == canonical_code(g.graph())) return true;
  }
  return false;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::ParseError;
}

TEST(Constructors, BasicShapes) {
  EXPECT_EQ(make_star(0).size(), 1);
  EXPECT_EQ(make_star(1).size(), 2);
  EXPECT_EQ(wiener(make_cycle(3).graph()), 3u);
  EXPECT_EQ(make_path(0).order(), 1);
  EXPECT_EQ(code_of([] { make_cycle(2); }), Errc::GirthTooSmall);
}

TEST(Constructors, MakeSab) {
  EXPECT_EQ(as_subdivided_star(make_sab(4, 4))->lengths, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(as_subdivided_star(make_sab(2, 3))->lengths, (std::vector<int>{2, 1}));
  EXPECT_EQ(as_subdivided_star(make_sab(3, 6))->lengths, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(code_of([] { make_sab(3, 2); }), Errc::TooFewVertices);
  EXPECT_EQ(code_of([] { make_sab(0, 2); }), Errc::InvalidSpec);
  for (int b = 1; b <= 6; ++b) {
    for (int m = b; m <= 20; ++m) {
      const auto spec = as_subdivided_star(make_sab(b, m));
      ASSERT_TRUE(spec);
      EXPECT_TRUE(spec->almost_balanced());
      EXPECT_EQ(spec->edges(), m);
      EXPECT_EQ(spec->balanced(), m % b == 0);
    }
  }
}

TEST(Constructors, MakeHIsSizeExact) {
  const UnicyclicGraph g = make_H({{kK2, kK1, kK1, kK1, kK1}});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(wiener(g.graph()), 26u);
  const UnicyclicGraph c = make_H({{kK1, kK1, kK1, kK1}});
  EXPECT_EQ(c.graph(), make_cycle(4).graph());
  EXPECT_EQ(wiener(make_H({{make_star(2), kK1, kK1}}).graph()), 15u);
  const HComposition spec{{make_sab(2, 5), kK2, make_sab(3, 3)}};
  EXPECT_EQ(make_H(spec).order(), spec.order());
  EXPECT_EQ(spec.order(), 3 + 5 + 1 + 3);
  EXPECT_EQ(code_of([] { make_H({{kK1, kK1}}); }), Errc::GirthTooSmall);
}

TEST(Constructors, DecomposeInvertsMakeH) {
  const HComposition spec{{make_sab(2, 3), kK1, kK2, make_star(3)}};
  const UnicyclicGraph g = make_H(spec);
  const UnicyclicGraph again = make_H(decompose(g));
  EXPECT_EQ(canonical_code(g.graph()), canonical_code(again.graph()));
}

TEST(Theorem1Family, Examples) {
  const auto f60 = theorem1_family({6, 0});
  EXPECT_TRUE(contains_iso(f60, make_H({{kK2, kK2, kK2}})));
  const auto f55 = theorem1_family({5, 5});
  ASSERT_EQ(f55.size(), 1u);
  EXPECT_EQ(canonical_code(f55[0].graph()), canonical_code(make_cycle(5).graph()));
  EXPECT_TRUE(contains_iso(theorem1_family({6, 4}), make_H({{kK2, kK1, kK1, kK1, kK1}})));
  EXPECT_EQ(code_of([] { theorem1_family({9, 6}); }), Errc::InvalidClassKey);
}

TEST(Theorem2Family, Examples) {
  const auto f53 = theorem2_family({5, 3});
  ASSERT_EQ(f53.size(), 1u);
  EXPECT_EQ(canonical_code(f53[0].graph()),
            canonical_code(make_H({{make_star(2), kK1, kK1}}).graph()));
  // Two leaves on C4 is a 6-vertex graph; on seven vertices the class is C5
  // with two leaves at one vertex.
  EXPECT_TRUE(contains_iso(theorem2_family({6, 4}), make_H({{make_star(2), kK1, kK1, kK1}})));
  EXPECT_TRUE(contains_iso(theorem2_family({6, 4}), make_H({{kK2, kK1, kK1, kK1, kK1}})));
  const auto f75 = theorem2_family({7, 5});
  ASSERT_EQ(f75.size(), 1u);
  EXPECT_EQ(canonical_code(f75[0].graph()),
            canonical_code(make_H({{make_star(2), kK1, kK1, kK1, kK1}}).graph()));
  EXPECT_EQ(code_of([] { theorem2_family({9, 6}); }), Errc::InvalidClassKey);
  EXPECT_EQ(code_of([] { theorem2_family({8, 6}); }), Errc::ClassKeyOutOfTheoremRange);
}

TEST(Families, MembersLieInTheirClass) {
  for (int n = 3; n <= 14; ++n) {
    for (int r = n % 2; r <= n; r += 2) {
      const ClassKey key{n, r};
      for (const auto& g : theorem1_family(key)) {
        EXPECT_EQ(g.order(), n);
        EXPECT_EQ(oracle::even_degrees(g.graph()), r);
      }
      if (!key.characterised()) continue;
      const auto t1 = theorem1_family(key);
      for (const auto& g : theorem2_family(key)) {
        EXPECT_EQ(g.order(), n);
        EXPECT_EQ(oracle::even_degrees(g.graph()), r);
        EXPECT_TRUE(contains_iso(t1, g)) << "(" << n << "," << r << ")";
      }
    }
  }
}

}  // namespace
}  // namespace uniwiener
