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

#include "uniwiener/verification.hpp"

namespace uniwiener {
namespace {

void expect_no_failures(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    EXPECT_NE(r.status, Status::Fail) << r.name << " n=" << r.n << " r=" << r.r.value_or(-1);
    EXPECT_TRUE(r.counterexamples.empty());
  }
}

const VerificationReport* find(const std::vector<VerificationReport>& reports, int r) {
  for (const auto& rep : reports) {
    if (rep.r == r) return &rep;
  }
  return nullptr;
}

TEST(Verification, TheoremsSmallOrders) {
  for (int n = 3; n <= 9; ++n) {
    expect_no_failures(verify_theorem1(n));
    expect_no_failures(verify_theorem2(n));
    expect_no_failures(verify_structural_claims(n));
  }
}

TEST(Verification, TheoremExamples) {
  const auto t1 = verify_theorem1(5);
  ASSERT_TRUE(find(t1, 5));
  EXPECT_EQ(find(t1, 5)->status, Status::Pass);

  const auto t2 = verify_theorem2(5);
  ASSERT_TRUE(find(t2, 3));
  EXPECT_EQ(find(t2, 3)->status, Status::Pass);
  EXPECT_EQ(find(t2, 3)->note, "minW=15 minimizers=1");

  const auto six = verify_theorem2(6);
  ASSERT_TRUE(find(six, 4));
  EXPECT_EQ(find(six, 4)->note, "minW=26 minimizers=2");
  EXPECT_EQ(find(six, 4)->instances, 2u);

  const auto eight = verify_theorem2(8);
  ASSERT_TRUE(find(eight, 6));
  EXPECT_EQ(find(eight, 6)->status, Status::Note);
  EXPECT_EQ(find(eight, 6)->instances, 0u);
}

TEST(Verification, LemmaSweeps) {
  LemmaRanges small;
  small.shift_nmax = 7;
  small.bridge_nmax = 7;
  small.contraction_nmax = 8;
  small.rebalance_nmax = 8;
  small.family_nmax = 12;
  const auto reports = verify_lemmas(small, 2);
  expect_no_failures(reports);
  EXPECT_EQ(reports.size(), 10u);
  for (const auto& r : reports) EXPECT_GT(r.instances, 0u) << r.name;
}

TEST(Verification, ContractionQualifyingCounts) {
  // Cumulative qualifying graphs for n = 4..10: 0, 1, 2, 4, 10, 14, 25.
  const std::vector<std::size_t> cumulative{0, 1, 3, 7, 17, 31, 56};
  for (int n = 4; n <= 10; ++n) {
    EXPECT_EQ(verify_contraction_lemma(n).instances, cumulative[static_cast<std::size_t>(n - 4)]);
  }
}

TEST(Verification, ZeroCaseAndErratum) {
  const auto zero = verify_operation_A_zero_case();
  EXPECT_EQ(zero.status, Status::Pass);
  EXPECT_EQ(zero.note, "W(G)=130 W(G_A)=130");
  const auto e = verify_erratum();
  EXPECT_EQ(e.status, Status::Pass);
  EXPECT_EQ(e.note, "common value 26");
}

TEST(Verification, SuiteOrderIndependentOfJobs) {
  const auto a = verify_suite(3, 7, CheckSet::All, 1);
  const auto b = verify_suite(3, 7, CheckSet::All, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].r, b[i].r);
    EXPECT_EQ(a[i].instances, b[i].instances);
    EXPECT_EQ(a[i].note, b[i].note);
  }
}

TEST(Verification, FailedReportCarriesCounterexample) {
  const Counterexample c = wiener_counterexample(Graph(2, {{0, 1}}), "2", "made up");
  EXPECT_EQ(c.observed, "1");
  EXPECT_EQ(c.edges, "2 1\n0 1\n");
  EXPECT_EQ(c.replay, "wiener");
}

}  // namespace
}  // namespace uniwiener
