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

#include "uniwiener/verification.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <set>
#include <sstream>

#include "uniwiener/canonical.hpp"
#include "uniwiener/closed_forms.hpp"
#include "uniwiener/constructors.hpp"
#include "uniwiener/enumeration.hpp"
#include "uniwiener/error.hpp"
#include "uniwiener/io.hpp"
#include "uniwiener/transforms.hpp"

namespace uniwiener {

namespace {

using Clock = std::chrono::steady_clock;

int team_size(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join(const std::vector<Vertex>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string key_name(ClassKey key) {
  return "(" + std::to_string(key.n) + "," + std::to_string(key.r) + ")";
}

VerificationReport make_report(std::string name, int n, std::optional<int> r) {
  VerificationReport report;
  report.name = std::move(name);
  report.n = n;
  report.r = r;
  return report;
}

void finish(VerificationReport& report, Clock::time_point start) {
  if (!report.counterexamples.empty()) report.status = Status::Fail;
  report.runtime_ms = elapsed_ms(start);
}

std::vector<Graph> graphs_up_to(int nmax, int jobs) {
  std::vector<Graph> out;
  for (int n = 3; n <= nmax; ++n) {
    for (const CodedGraph& c : enumerate_unicyclic(n, jobs)) out.push_back(c.graph.graph());
  }
  return out;
}

// Runs fn on every graph in parallel. fn returns its instance count and appends
// violations; an escaping exception is itself a violation. Results are merged
// in input order.
template <class Fn>
void sweep(const std::vector<Graph>& graphs, int jobs, VerificationReport& report, Fn fn) {
  std::vector<std::vector<Counterexample>> found(graphs.size());
  std::vector<std::size_t> counts(graphs.size(), 0);
#pragma omp parallel for schedule(dynamic, 4) num_threads(team_size(jobs))
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    try {
      counts[i] = fn(graphs[i], found[i]);
    } catch (const std::exception& e) {
      found[i].push_back(wiener_counterexample(graphs[i], "no error", e.what()));
    }
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    report.instances += counts[i];
    for (auto& c : found[i]) report.counterexamples.push_back(std::move(c));
  }
}

std::set<CanonicalCode> codes_of(const std::vector<UnicyclicGraph>& graphs) {
  std::set<CanonicalCode> out;
  for (const auto& g : graphs) out.insert(canonical_code(g.graph()));
  return out;
}

bool is_star_at(const UnicyclicGraph& g, Vertex root) {
  for (Vertex x : g.hanging_tree(root)) {
    if (x != root && g.graph().degree(x) != 1) return false;
  }
  return true;
}

std::int64_t signed_delta(std::uint64_t before, std::uint64_t after) {
  return static_cast<std::int64_t>(before) - static_cast<std::int64_t>(after);
}

// H(SaB(t;b), K1, ..., K1) on C_girth with m tree edges; u = 0.
UnicyclicGraph sab_on_cycle(int girth, int b, int m) {
  HComposition spec;
  spec.trees.assign(static_cast<std::size_t>(girth), RootedTree{});
  spec.trees[0] = make_sab(b, m);
  return make_H(spec);
}

std::string sab_name(int girth, int b, int m) {
  return "g=" + std::to_string(girth) + " b=" + std::to_string(b) + " m=" + std::to_string(m);
}

}  // namespace

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Note:
      return "note";
  }
  return "unknown";
}

Counterexample wiener_counterexample(const Graph& g, std::string expected, std::string detail) {
  Counterexample c;
  c.edges = to_edge_list(g);
  c.expected = std::move(expected);
  c.observed = is_connected(g) ? std::to_string(wiener(g)) : "Disconnected";
  c.replay = "wiener";
  c.detail = std::move(detail);
  return c;
}

Counterexample transform_counterexample(const Graph& before, const Graph& after,
                                        std::string replay, std::string expected,
                                        std::string detail) {
  const std::uint64_t wb = wiener(before);
  const std::uint64_t wa = wiener(after);
  Counterexample c;
  c.edges = to_edge_list(before);
  c.expected = std::move(expected);
  c.observed = std::to_string(wb) + " " + std::to_string(wa) + " " +
               std::to_string(signed_delta(wb, wa));
  c.replay = std::move(replay);
  c.detail = std::move(detail);
  return c;
}

std::vector<VerificationReport> verify_theorem1(int n, int jobs) {
  std::vector<VerificationReport> out;
  for (const ClassSummary& s : classify(n, jobs)) {
    const auto start = Clock::now();
    VerificationReport report = make_report("theorem1", n, s.key.r);
    const std::set<CanonicalCode> shapes = codes_of(theorem1_family(s.key));
    for (const CodedGraph& m : s.minimizers) {
      ++report.instances;
      if (!shapes.contains(m.code)) {
        report.counterexamples.push_back(wiener_counterexample(
            m.graph.graph(), "isomorphic to a listed shape",
            "minimiser of " + key_name(s.key) + " outside the listed shapes"));
      }
    }
    report.note = "minW=" + std::to_string(s.min_wiener) +
                  " minimizers=" + std::to_string(s.minimizers.size());
    finish(report, start);
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<VerificationReport> verify_theorem2(int n, int jobs) {
  std::vector<VerificationReport> out;
  for (const ClassSummary& s : classify(n, jobs)) {
    const auto start = Clock::now();
    VerificationReport report = make_report("theorem2", n, s.key.r);
    report.note = "minW=" + std::to_string(s.min_wiener) +
                  " minimizers=" + std::to_string(s.minimizers.size());
    if (!s.key.characterised()) {
      report.status = Status::Note;
      report.note += " (r > (n+3)/2, not characterised)";
      finish(report, start);
      out.push_back(std::move(report));
      continue;
    }
    const std::vector<UnicyclicGraph> listed = theorem2_family(s.key);
    const std::set<CanonicalCode> shapes = codes_of(theorem1_family(s.key));
    std::set<CanonicalCode> found;
    for (const CodedGraph& m : s.minimizers) found.insert(m.code);
    std::set<CanonicalCode> listed_codes;
    for (const UnicyclicGraph& g : listed) {
      ++report.instances;
      const CanonicalCode code = canonical_code(g.graph());
      listed_codes.insert(code);
      if (!found.contains(code)) {
        report.counterexamples.push_back(
            wiener_counterexample(g.graph(), std::to_string(s.min_wiener),
                                  "listed graph is not a minimiser of " + key_name(s.key)));
      }
      if (!shapes.contains(code)) {
        report.counterexamples.push_back(
            wiener_counterexample(g.graph(), "isomorphic to a listed shape",
                                  "listed minimiser outside the necessary shapes"));
      }
    }
    for (const CodedGraph& m : s.minimizers) {
      if (!listed_codes.contains(m.code)) {
        report.counterexamples.push_back(wiener_counterexample(
            m.graph.graph(), "a listed graph",
            "minimiser of " + key_name(s.key) + " missing from the list"));
      }
    }
    finish(report, start);
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<VerificationReport> verify_structural_claims(int n, int jobs) {
  const UnicyclicGraph pendant_c5 = make_H({{make_star(1), {}, {}, {}, {}}});
  const CanonicalCode pendant_code = canonical_code(pendant_c5.graph());
  std::vector<VerificationReport> out;
  for (const ClassSummary& s : classify(n, jobs)) {
    const auto start = Clock::now();
    VerificationReport report = make_report("claims", n, s.key.r);
    for (const CodedGraph& m : s.minimizers) {
      ++report.instances;
      const UnicyclicGraph& g = m.graph;
      const Graph& graph = g.graph();
      auto fail = [&](const std::string& what) {
        report.counterexamples.push_back(wiener_counterexample(graph, "claim holds", what));
      };
      for (const Edge& e : nontrivial_bridges(graph)) {
        if (graph.degree(e.u) % 2 != 0 || graph.degree(e.v) % 2 != 0) {
          fail("bridge " + std::to_string(e.u) + " " + std::to_string(e.v) +
               " has an odd endpoint");
        }
      }
      int big = 0;
      int top = 0;
      for (Vertex u : g.cycle()) {
        const int d = graph.degree(u);
        top = std::max(top, d);
        if (d >= 4) ++big;
        if (d % 2 != 0 && !is_star_at(g, u)) {
          fail("odd cycle vertex " + std::to_string(u) + " does not carry a star");
        }
        if (d >= 4 && d % 2 == 0) {
          const auto branches = star_branches(g, u);
          if (!branches) {
            fail("even cycle vertex " + std::to_string(u) + " does not carry a subdivided star");
            continue;
          }
          const auto [lo, hi] = std::minmax_element(
              branches->begin(), branches->end(),
              [](const Branch& a, const Branch& b) { return a.length < b.length; });
          if (hi->length - lo->length > 1) {
            fail("branches at " + std::to_string(u) + " differ by more than 1");
          }
        }
      }
      if (big > 1) fail("more than one cycle vertex of degree >= 4");
      if (top >= 3 && top % 2 != 0 && g.girth() != 3 && m.code != pendant_code) {
        fail("odd maximum cycle degree on girth " + std::to_string(g.girth()));
      }
    }
    finish(report, start);
    out.push_back(std::move(report));
  }
  return out;
}

VerificationReport verify_shift_lemma(int nmax, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = make_report("shift", nmax, std::nullopt);
  sweep(graphs_up_to(nmax, jobs), jobs, report, [](const Graph& g, auto& out) {
    const std::uint64_t w = wiener(g);
    const auto specs = shift_specs(g);
    for (const ShiftSpec& spec : specs) {
      const Graph xy = shift(spec, ShiftDirection::XtoY);
      const Graph yx = shift(spec, ShiftDirection::YtoX);
      if (std::min(wiener(xy), wiener(yx)) >= w) {
        const bool use_xy = wiener(xy) <= wiener(yx);
        out.push_back(transform_counterexample(
            g, use_xy ? xy : yx,
            "transform --op shift --u " + std::to_string(spec.u()) + " --v " +
                std::to_string(spec.v()) + " --x " + join(spec.x_side()) + " --y " +
                join(spec.y_side()) + " --dir " + (use_xy ? "xy" : "yx"),
            "delta > 0 in one direction", "neither shift direction decreases W"));
      }
    }
    return specs.size();
  });
  finish(report, start);
  return report;
}

VerificationReport verify_bridge_corollary(int nmax, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = make_report("bridge", nmax, std::nullopt);
  sweep(graphs_up_to(nmax, jobs), jobs, report, [](const Graph& g, auto& out) {
    const auto bridges = nontrivial_bridges(g);
    for (const Edge& e : bridges) {
      const Graph h = shift_over_bridge(g, e);
      const std::string replay =
          "transform --op bridge --edge " + std::to_string(e.u) + "," + std::to_string(e.v);
      if (wiener(h) >= wiener(g)) {
        out.push_back(transform_counterexample(g, h, replay, "delta > 0", "W did not drop"));
      }
      const bool odd_end = g.degree(e.u) % 2 != 0 || g.degree(e.v) % 2 != 0;
      if (odd_end && even_degree_count(h) != even_degree_count(g)) {
        out.push_back(transform_counterexample(g, h, replay, "same even-degree count",
                                               "parity count changed"));
      }
    }
    return bridges.size();
  });
  finish(report, start);
  return report;
}

VerificationReport verify_contraction_lemma(int nmax, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = make_report("contraction", nmax, std::nullopt);
  sweep(graphs_up_to(nmax, jobs), jobs, report, [](const Graph& graph, auto& out) {
    const UnicyclicGraph g(graph);
    try {
      check_contraction_preconditions(g);
    } catch (const Error&) {
      return std::size_t{0};
    }
    const ContractionChoice choice = choose_contraction(g);
    const UnicyclicGraph h = contract_and_leaf(g, choice);
    const std::string replay = "transform --op contract --u " + std::to_string(choice.u) +
                               " --v " + std::to_string(choice.v);
    if (wiener(h.graph()) >= wiener(graph)) {
      out.push_back(transform_counterexample(graph, h.graph(), replay, "delta > 0",
                                             "W did not drop"));
    }
    if (class_of(h.graph()) != class_of(graph)) {
      out.push_back(transform_counterexample(graph, h.graph(), replay, "same (n, r)",
                                             "class changed"));
    }
    if (h.girth() != g.girth() - 1) {
      out.push_back(transform_counterexample(graph, h.graph(), replay, "girth drops by 1",
                                             "girth " + std::to_string(h.girth())));
    }
    return std::size_t{1};
  });
  finish(report, start);
  return report;
}

VerificationReport verify_rebalance(int nmax, int jobs) {
  const auto start = Clock::now();
  VerificationReport report = make_report("rebalance", nmax, std::nullopt);
  sweep(graphs_up_to(nmax, jobs), jobs, report, [](const Graph& graph, auto& out) {
    const UnicyclicGraph g(graph);
    std::size_t count = 0;
    for (Vertex c : g.cycle()) {
      const auto branches = star_branches(g, c);
      if (!branches) continue;
      for (const Branch& a : *branches) {
        for (const Branch& b : *branches) {
          if (a.length - b.length < 2) continue;
          ++count;
          const UnicyclicGraph h = rebalance(g, c, a.start, b.start);
          const std::string replay = "transform --op rebalance --center " + std::to_string(c) +
                                     " --long " + std::to_string(a.start) + " --short " +
                                     std::to_string(b.start);
          if (wiener(h.graph()) >= wiener(graph)) {
            out.push_back(transform_counterexample(graph, h.graph(), replay, "delta > 0",
                                                   "W did not drop"));
          }
          if (class_of(h.graph()) != class_of(graph)) {
            out.push_back(transform_counterexample(graph, h.graph(), replay, "same (n, r)",
                                                   "class changed"));
          }
        }
      }
    }
    return count;
  });
  finish(report, start);
  return report;
}

VerificationReport verify_cycle_distance_drop(int gmax) {
  const auto start = Clock::now();
  VerificationReport report = make_report("cycle_drop", gmax, std::nullopt);
  for (int g = 4; g <= gmax; ++g) {
    ++report.instances;
    const UnicyclicGraph cg = make_cycle(g);
    const auto cycle = cg.cycle();
    std::uint64_t rest = 0;
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      const DistanceVector d = bfs(cg.graph(), cycle[i]);
      for (std::size_t j = i + 1; j < cycle.size(); ++j) {
        rest += static_cast<std::uint64_t>(d.dist[static_cast<std::size_t>(cycle[j])]);
      }
    }
    const std::uint64_t brute = rest - wiener(make_cycle(g - 1).graph());
    if (brute != cycle_distance_drop(g)) {
      report.counterexamples.push_back(wiener_counterexample(
          cg.graph(), "drop " + std::to_string(cycle_distance_drop(g)),
          "brute-force drop " + std::to_string(brute)));
    }
  }
  finish(report, start);
  return report;
}

VerificationReport verify_branch_length_lemma(int nmax) {
  const auto start = Clock::now();
  VerificationReport report = make_report("branch_length", nmax, std::nullopt);
  for (int n = 5; n <= nmax; ++n) {
    for (int girth = 3; girth <= n - 2; ++girth) {
      const int m = n - girth;
      for (int b = 2; b <= m; b += 2) {
        const UnicyclicGraph g = sab_on_cycle(girth, b, m);
        const int r = even_degree_count(g.graph());
        if (r < 3 || 2 * r > n + 3 || g.graph().degree(0) != n - r + 2) continue;
        ++report.instances;
        const int t = (m + b - 1) / b;
        const bool has_leaf = m < 2 * b || t == 1;
        if (t > 2) {
          report.counterexamples.push_back(wiener_counterexample(
              g.graph(), "t <= 2", sab_name(girth, b, m) + " has t=" + std::to_string(t)));
        }
        if (!has_leaf && !(2 * r == n + 3 && girth == 3)) {
          report.counterexamples.push_back(wiener_counterexample(
              g.graph(), "centre has a leaf neighbour", sab_name(girth, b, m)));
        }
      }
    }
  }
  finish(report, start);
  return report;
}

VerificationReport verify_operation_A_sign(int nmax) {
  const auto start = Clock::now();
  VerificationReport report = make_report("opA_sign", nmax, std::nullopt);
  std::size_t skipped = 0;
  for (int n = 6; n <= nmax; ++n) {
    for (int girth = 4; girth <= n - 2; ++girth) {
      const int m = n - girth;
      for (int b = 2; b <= m; b += 2) {
        if (m >= 2 * b) continue;
        const UnicyclicGraph g = sab_on_cycle(girth, b, m);
        const int r = even_degree_count(g.graph());
        if (r < 3 || 2 * r > n + 3) {
          ++skipped;
          continue;
        }
        ++report.instances;
        const std::uint64_t w = wiener(g.graph());
        const Rational closed = operation_A_delta_closed(girth, m + 1);
        const int expected = (girth == 7 && b == 4 && m == 4) ? 0 : (girth <= 5 ? -1 : 1);
        for (const OperationAChoice& c : operation_A_choices(g)) {
          const UnicyclicGraph h = operation_A(g, c);
          const std::int64_t delta = signed_delta(w, wiener(h.graph()));
          const int sign = (delta > 0) - (delta < 0);
          const std::string replay = "transform --op opA --merge " + std::to_string(c.merged) +
                                     " --leaf " + std::to_string(c.leaf);
          if (sign != expected) {
            report.counterexamples.push_back(transform_counterexample(
                g.graph(), h.graph(), replay, "sign " + std::to_string(expected),
                sab_name(girth, b, m)));
          }
          if (Rational(delta) != closed) {
            std::ostringstream what;
            what << sab_name(girth, b, m) << ": closed form " << closed;
            report.counterexamples.push_back(transform_counterexample(
                g.graph(), h.graph(), replay, "delta equals closed form", what.str()));
          }
        }
      }
    }
  }
  report.note = std::to_string(skipped) + " out-of-regime shapes skipped";
  finish(report, start);
  return report;
}

VerificationReport verify_operation_A_preservation(int nmax) {
  const auto start = Clock::now();
  VerificationReport report = make_report("opA_preserve", nmax, std::nullopt);
  for (int n = 5; n <= nmax; ++n) {
    for (int girth = 4; girth <= n - 1; ++girth) {
      const int m = n - girth;
      for (int b = 1; b <= m; ++b) {
        if (m >= 2 * b && b != m) continue;
        const UnicyclicGraph g = sab_on_cycle(girth, b, m);
        for (const OperationAChoice& c : operation_A_choices(g)) {
          ++report.instances;
          const UnicyclicGraph h = operation_A(g, c);
          if (class_of(h.graph()) != class_of(g.graph()) || h.girth() != girth - 1) {
            report.counterexamples.push_back(transform_counterexample(
                g.graph(), h.graph(),
                "transform --op opA --merge " + std::to_string(c.merged) + " --leaf " +
                    std::to_string(c.leaf),
                "same (n, r), girth - 1", sab_name(girth, b, m)));
          }
        }
      }
    }
  }
  finish(report, start);
  return report;
}

VerificationReport verify_operation_A_zero_case() {
  const auto start = Clock::now();
  VerificationReport report = make_report("opA_zero", 11, std::nullopt);
  report.instances = 1;
  const UnicyclicGraph g = sab_on_cycle(7, 4, 4);
  const UnicyclicGraph h = operation_A(g);
  const std::uint64_t wg = wiener(g.graph());
  const std::uint64_t wh = wiener(h.graph());
  if (wg != 130 || wh != 130 || operation_A_delta_closed(7, 5) != Rational(0)) {
    report.counterexamples.push_back(transform_counterexample(
        g.graph(), h.graph(), "transform --op opA", "130 130 0", "g=7 with SB(1;4)"));
  }
  report.note = "W(G)=" + std::to_string(wg) + " W(G_A)=" + std::to_string(wh);
  finish(report, start);
  return report;
}

VerificationReport verify_erratum() {
  const auto start = Clock::now();
  VerificationReport report = make_report("erratum", 6, 4);
  report.instances = 1;
  const UnicyclicGraph pendant = make_H({{make_star(1), {}, {}, {}, {}}});
  const UnicyclicGraph split = make_H({{make_sab(2, 2), {}, {}, {}}});
  const std::uint64_t a = wiener(pendant.graph());
  const std::uint64_t b = wiener(split.graph());
  if (a != b) {
    report.counterexamples.push_back(
        wiener_counterexample(split.graph(), std::to_string(a), "values differ"));
  }
  report.note = "common value " + std::to_string(a);
  finish(report, start);
  return report;
}

std::vector<VerificationReport> verify_lemmas(const LemmaRanges& ranges, int jobs) {
  std::vector<VerificationReport> out;
  out.push_back(verify_shift_lemma(ranges.shift_nmax, jobs));
  out.push_back(verify_bridge_corollary(ranges.bridge_nmax, jobs));
  out.push_back(verify_contraction_lemma(ranges.contraction_nmax, jobs));
  out.push_back(verify_rebalance(ranges.rebalance_nmax, jobs));
  out.push_back(verify_cycle_distance_drop(ranges.drop_gmax));
  out.push_back(verify_branch_length_lemma(ranges.family_nmax));
  out.push_back(verify_operation_A_sign(ranges.family_nmax));
  out.push_back(verify_operation_A_preservation(ranges.family_nmax));
  out.push_back(verify_operation_A_zero_case());
  out.push_back(verify_erratum());
  return out;
}

std::vector<VerificationReport> verify_lemmas(int nmax, int jobs) {
  LemmaRanges ranges;
  ranges.shift_nmax = nmax;
  ranges.bridge_nmax = nmax;
  ranges.contraction_nmax = nmax;
  ranges.rebalance_nmax = nmax;
  ranges.family_nmax = std::max(nmax, 14);
  return verify_lemmas(ranges, jobs);
}

std::vector<VerificationReport> verify_suite(int nmin, int nmax, CheckSet checks, int jobs) {
  std::vector<VerificationReport> out;
  auto append = [&](std::vector<VerificationReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = checks == CheckSet::All;
  for (int n = std::max(nmin, 3); n <= nmax; ++n) {
    if (all || checks == CheckSet::Theorem1) append(verify_theorem1(n, jobs));
    if (all || checks == CheckSet::Theorem2) append(verify_theorem2(n, jobs));
    if (all || checks == CheckSet::Claims) append(verify_structural_claims(n, jobs));
  }
  if (all || checks == CheckSet::Lemmas) append(verify_lemmas(nmax, jobs));
  return out;
}

}  // namespace uniwiener
