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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uniwiener/cli.hpp"
#include "uniwiener/constructors.hpp"
#include "uniwiener/io.hpp"
#include "uniwiener/transforms.hpp"

namespace uniwiener {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("uniwiener_test_" + name);
}

TEST(Cli, WienerOfPentagon) {
  const Result r = run({"wiener"}, to_edge_list(make_cycle(5).graph()));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "15\n");
}

TEST(Cli, TransmissionAndInfinity) {
  EXPECT_EQ(run({"wiener", "--vertex", "2"}, to_edge_list(make_cycle(6).graph())).out, "9\n");
  EXPECT_EQ(run({"wiener", "--vertex", "0"}, "3 1\n0 1\n").out, "inf\n");
  EXPECT_EQ(run({"wiener"}, "3 1\n0 1\n").code, cli::kExitPrecondition);
}

TEST(Cli, MinimizeFiveThree) {
  const Result r = run({"minimize", "--n", "5", "--r", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "minW=15\n5 5\n0 1\n0 2\n0 3\n0 4\n1 2\n");
  EXPECT_EQ(run({"minimize", "--n", "4", "--r", "3"}).code, cli::kExitPrecondition);
}

TEST(Cli, VerifyAll) {
  const Result r = run({"verify", "--n-max", "8", "--check", "all"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("summary:"), std::string::npos);
  EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
}

TEST(Cli, VerifyJsonAndReportFile) {
  const auto path = temp_file("report.jsonl");
  const Result r =
      run({"verify", "--n-max", "6", "--check", "theorem2", "--json", "--report", path.string()});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    for (const char* key : {"name", "n", "r", "status", "note", "instances", "counterexamples",
                            "runtime_ms"}) {
      EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["name"], "theorem2");
    ++count;
  }
  EXPECT_GT(count, 0u);
  std::ifstream file(path);
  std::size_t file_lines = 0;
  for (std::string line; std::getline(file, line);) ++file_lines;
  EXPECT_EQ(file_lines, count);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  const Result unknown = run({"wiener", "--bogus"});
  EXPECT_EQ(unknown.code, cli::kExitUsage);
  EXPECT_FALSE(unknown.err.empty() && unknown.out.empty());
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"wiener"}, "3 3\n0 1\n").code, cli::kExitUsage);
  EXPECT_EQ(run({"construct", "--family", "cycle"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"construct", "--family", "H", "--trees", "K1,Q7,K1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--n-max", "40"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, PreconditionErrors) {
  EXPECT_EQ(run({"construct", "--family", "cycle", "--g", "2"}).code, cli::kExitPrecondition);
  EXPECT_EQ(run({"transform", "--op", "contract"}, to_edge_list(make_cycle(5).graph())).code,
            cli::kExitPrecondition);
  EXPECT_EQ(run({"transform", "--op", "opA"}, to_edge_list(make_cycle(3).graph())).code,
            cli::kExitPrecondition);
}

TEST(Cli, ConstructFormats) {
  EXPECT_EQ(run({"construct", "--family", "cycle", "--g", "3"}).out, "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(run({"construct", "--family", "path", "--t", "2"}).out, "3 2\n0 1\n1 2\n");
  EXPECT_EQ(run({"construct", "--family", "star", "--b", "2"}).out, "3 2\n0 1\n0 2\n");
  EXPECT_EQ(run({"construct", "--family", "sab", "--b", "2", "--m", "3"}).out,
            "4 3\n0 1\n0 3\n1 2\n");
  EXPECT_EQ(run({"construct", "--family", "H", "--trees", "K2,K1,K1,K1,K1"}).out,
            to_edge_list(make_H({{make_star(1), {}, {}, {}, {}}}).graph()));
  EXPECT_EQ(run({"construct", "--family", "cycle", "--g", "3", "--format", "dot"}).out,
            to_dot(make_cycle(3).graph()));
  const Result fam = run({"construct", "--family", "theorem2", "--n", "6", "--r", "4"});
  EXPECT_EQ(fam.code, 0);
  EXPECT_EQ(std::count(fam.out.begin(), fam.out.end(), '\n'), 2 * 7 + 1);
}

TEST(Cli, EnumerateCount) {
  const Result r = run({"enumerate", "--n", "5", "--format", "count"});
  EXPECT_EQ(r.out, "5 1 1 16\n5 3 3 15\n5 5 1 15\n");
  EXPECT_EQ(run({"enumerate", "--n", "5", "--r", "3", "--format", "count"}).out, "5 3 3 15\n");
}

TEST(Cli, EnumerateIndependentOfJobs) {
  for (const char* format : {"edges", "dot", "count"}) {
    const Result one = run({"--jobs", "1", "enumerate", "--n", "8", "--format", format});
    const Result many = run({"enumerate", "--n", "8", "--format", format, "--jobs", "8"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, many.out);
  }
}

TEST(Cli, TransformReportsDelta) {
  const Result r = run({"transform", "--op", "bridge", "--edge", "1,2"}, "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4 3\n0 2\n1 2\n2 3\n10 9 1\n");
  const auto path = temp_file("transform.txt");
  const Result o = run({"transform", "--op", "bridge", "--edge", "1,2", "-o", path.string()},
                       "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(o.out, "10 9 1\n");
  std::ifstream file(path);
  std::stringstream body;
  body << file.rdbuf();
  EXPECT_EQ(body.str(), "4 3\n0 2\n1 2\n2 3\n");
  std::filesystem::remove(path);
}

TEST(Cli, TransformOps) {
  HComposition spec{std::vector<RootedTree>(7, RootedTree{})};
  spec.trees[0] = make_star(4);
  const std::string seven = to_edge_list(make_H(spec).graph());
  const std::string out = run({"transform", "--op", "opA"}, seven).out;
  EXPECT_EQ(out.substr(out.size() - 10), "130 130 0\n");
  const std::string square = to_edge_list(make_H({{{}, make_star(1), {}, {}}}).graph());
  const Result c = run({"transform", "--op", "contract"}, square);
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("16 15 1\n"), std::string::npos);
  const Result s = run({"transform", "--op", "shift", "--u", "1", "--v", "2", "--x", "0,1", "--y",
                        "2,3", "--dir", "yx"},
                       "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(s.out, "4 3\n0 1\n1 2\n1 3\n10 9 1\n");
  const std::string lopsided =
      to_edge_list(make_H({{make_subdivided_star({{3, 1}}), {}, {}}}).graph());
  const Result rb = run({"transform", "--op", "rebalance", "--center", "0", "--long", "3",
                         "--short", "6"},
                        lopsided);
  EXPECT_EQ(rb.code, 0) << rb.err;
}

TEST(Cli, ReplayReproducesObserved) {
  const Graph p3(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph star = shift_over_bridge(p3, {1, 2});
  Counterexample c = transform_counterexample(p3, star, "transform --op bridge --edge 1,2",
                                              "made-up expectation", "replay check");
  EXPECT_EQ(c.observed, "10 9 1");
  EXPECT_EQ(cli::replay(c), c.observed);
  const Counterexample w = wiener_counterexample(make_cycle(7).graph(), "0", "replay check");
  EXPECT_EQ(cli::replay(w), "42");
}

}  // namespace
}  // namespace uniwiener
