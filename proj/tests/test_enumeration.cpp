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

#include <map>

#include "oracles.hpp"
#include "uniwiener/canonical.hpp"
#include "uniwiener/constructors.hpp"
#include "uniwiener/enumeration.hpp"
#include "uniwiener/error.hpp"

namespace uniwiener {
namespace {

std::vector<CanonicalCode> codes(const std::vector<CodedGraph>& graphs) {
  std::vector<CanonicalCode> out;
  for (const auto& g : graphs) out.push_back(g.code);
  return out;
}

TEST(Enumeration, KnownCounts) {
  const std::map<int, std::size_t> expected{{3, 1},  {4, 2},   {5, 5},   {6, 13},  {7, 33},
                                            {8, 89}, {9, 240}, {10, 657}, {11, 1806}};
  for (const auto& [n, count] : expected) EXPECT_EQ(enumerate_unicyclic(n).size(), count) << n;
}

TEST(Enumeration, SortedDistinctAndValid) {
  for (int n = 3; n <= 9; ++n) {
    const auto graphs = enumerate_unicyclic(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (i) EXPECT_LT(graphs[i - 1].code, graphs[i].code);
      EXPECT_EQ(graphs[i].code, canonical_code(graphs[i].graph.graph()));
      EXPECT_NO_THROW(UnicyclicGraph(graphs[i].graph.graph()));
      EXPECT_EQ(graphs[i].graph.graph().size(), static_cast<std::size_t>(n));
    }
  }
}

TEST(Enumeration, OracleAndSerialAgree) {
  for (int n = 3; n <= 8; ++n) {
    const auto fast = codes(enumerate_unicyclic(n, 2));
    EXPECT_EQ(fast, codes(enumerate_labeled_oracle(n))) << n;
    EXPECT_EQ(fast, codes(enumerate_unicyclic_serial(n))) << n;
  }
  EXPECT_EQ(enumerate_labeled_oracle(4).size(), 2u);
  EXPECT_EQ(enumerate_labeled_oracle(6).size(), 13u);
  EXPECT_THROW(enumerate_labeled_oracle(10), Error);
}

TEST(Enumeration, IndependentOfWorkerCount) {
  for (int n = 5; n <= 10; ++n) {
    const auto one = codes(enumerate_unicyclic(n, 1));
    EXPECT_EQ(one, codes(enumerate_unicyclic(n, 3)));
    EXPECT_EQ(one, codes(enumerate_unicyclic(n, 8)));
  }
}

TEST(Classify, PartitionAndMinima) {
  for (int n = 3; n <= 9; ++n) {
    const auto all = enumerate_unicyclic(n);
    const auto summaries = classify(n, 2);
    std::size_t total = 0;
    for (const ClassSummary& s : summaries) {
      total += s.count;
      EXPECT_GE(s.count, 1u);
      ASSERT_FALSE(s.minimizers.empty());
      EXPECT_EQ((s.key.n - s.key.r) % 2, 0);
      std::uint64_t best = UINT64_MAX;
      std::size_t hits = 0;
      for (const auto& g : all) {
        if (oracle::even_degrees(g.graph.graph()) != s.key.r) continue;
        const std::uint64_t w = oracle::wiener(g.graph.graph());
        if (w < best) {
          best = w;
          hits = 0;
        }
        if (w == best) ++hits;
      }
      EXPECT_EQ(s.min_wiener, best);
      EXPECT_EQ(s.minimizers.size(), hits);
    }
    EXPECT_EQ(total, all.size());
    const auto serial = classify_serial(n);
    ASSERT_EQ(serial.size(), summaries.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_EQ(serial[i].key, summaries[i].key);
      EXPECT_EQ(serial[i].min_wiener, summaries[i].min_wiener);
      EXPECT_EQ(codes(serial[i].minimizers), codes(summaries[i].minimizers));
    }
  }
}

TEST(MinWiener, Examples) {
  const ClassSummary c5 = min_wiener({5, 5});
  EXPECT_EQ(c5.min_wiener, 15u);
  ASSERT_EQ(c5.minimizers.size(), 1u);
  EXPECT_EQ(c5.minimizers[0].code, canonical_code(make_cycle(5).graph()));
  const ClassSummary t = min_wiener({5, 3});
  EXPECT_EQ(t.min_wiener, 15u);
  ASSERT_EQ(t.minimizers.size(), 1u);
  EXPECT_EQ(t.minimizers[0].code, canonical_code(make_H({{make_star(2), {}, {}}}).graph()));
  const ClassSummary erratum = min_wiener({6, 4});
  EXPECT_EQ(erratum.min_wiener, 26u);
  EXPECT_EQ(erratum.minimizers.size(), 2u);
}

TEST(MinWiener, Errors) {
  auto code = [](ClassKey key) {
    try {
      min_wiener(key);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ParseError;
  };
  EXPECT_EQ(code({4, 3}), Errc::EmptyClass);
  EXPECT_EQ(code({3, 1}), Errc::EmptyClass);
  EXPECT_EQ(code({2, 0}), Errc::InvalidClassKey);
  EXPECT_EQ(code({5, 6}), Errc::InvalidClassKey);
}

}  // namespace
}  // namespace uniwiener
