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

#ifndef UNIWIENER_VERIFICATION_HPP_
#define UNIWIENER_VERIFICATION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uniwiener/graph.hpp"

namespace uniwiener {

enum class Status { Pass, Fail, Note };

std::string_view to_string(Status status) noexcept;

// A violating instance. Feeding `edges` (edge-list text) to the CLI with the
// arguments in `replay` prints `observed` as its last line.
struct Counterexample {
  std::string edges;
  std::string expected;
  std::string observed;
  std::string replay;
  std::string detail;
};

struct VerificationReport {
  std::string name;
  int n = 0;
  std::optional<int> r;
  Status status = Status::Pass;
  std::string note;
  std::size_t instances = 0;
  std::vector<Counterexample> counterexamples;
  double runtime_ms = 0.0;
};

// observed = W(g); replay = "wiener".
Counterexample wiener_counterexample(const Graph& g, std::string expected, std::string detail);
// observed = "W_before W_after delta"; replay = the transform arguments.
Counterexample transform_counterexample(const Graph& before, const Graph& after,
                                        std::string replay, std::string expected,
                                        std::string detail);

// One report per nonempty class U_{n,r}. Every minimiser must be isomorphic
// to a member of theorem1_family.
std::vector<VerificationReport> verify_theorem1(int n, int jobs = 0);

// One report per nonempty class. For 2r <= n + 3 the minimiser set must equal
// theorem2_family, which must also lie inside theorem1_family. Other classes
// get a Note with their minimum and nothing is asserted.
std::vector<VerificationReport> verify_theorem2(int n, int jobs = 0);

// One report per nonempty class: bridge parity, star shapes on the cycle, at
// most one big cycle vertex, almost balanced branches, and the short cycle for
// odd maximum cycle degree.
std::vector<VerificationReport> verify_structural_claims(int n, int jobs = 0);

// Individual lemma sweeps over every unicyclic graph (or family member) of
// order <= nmax.
VerificationReport verify_shift_lemma(int nmax, int jobs = 0);
VerificationReport verify_bridge_corollary(int nmax, int jobs = 0);
VerificationReport verify_contraction_lemma(int nmax, int jobs = 0);
VerificationReport verify_rebalance(int nmax, int jobs = 0);
VerificationReport verify_cycle_distance_drop(int gmax);
VerificationReport verify_branch_length_lemma(int nmax);
VerificationReport verify_operation_A_sign(int nmax);
VerificationReport verify_operation_A_preservation(int nmax);
VerificationReport verify_operation_A_zero_case();
VerificationReport verify_erratum();

struct LemmaRanges {
  int shift_nmax = 9;
  int bridge_nmax = 9;
  int contraction_nmax = 10;
  int rebalance_nmax = 10;
  int family_nmax = 14;
  int drop_gmax = 20;
};

std::vector<VerificationReport> verify_lemmas(const LemmaRanges& ranges, int jobs = 0);
// Enumeration sweeps bounded by nmax; family sweeps by max(nmax, 14).
std::vector<VerificationReport> verify_lemmas(int nmax, int jobs = 0);

// Which checks `verify_suite` runs.
enum class CheckSet { Theorem1, Theorem2, Claims, Lemmas, All };

// n in [nmin, nmax]; lemmas use nmax. Reports come in a fixed order
// independent of jobs.
std::vector<VerificationReport> verify_suite(int nmin, int nmax, CheckSet checks, int jobs = 0);

}  // namespace uniwiener

#endif  // UNIWIENER_VERIFICATION_HPP_
