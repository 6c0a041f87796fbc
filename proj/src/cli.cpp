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

#include "uniwiener/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "uniwiener/constructors.hpp"
#include "uniwiener/enumeration.hpp"
#include "uniwiener/error.hpp"
#include "uniwiener/io.hpp"
#include "uniwiener/transforms.hpp"

namespace uniwiener::cli {

namespace {

using nlohmann::json;

// Input-format problems are usage errors; everything else a precondition.
bool is_input_error(Errc code) {
  return code == Errc::ParseError || code == Errc::SelfLoop || code == Errc::DuplicateEdge ||
         code == Errc::VertexOutOfRange;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return read_edge_list(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    return read_edge_list(file);
  } catch (const Error& e) {
    if (is_input_error(e.code())) throw InputError(e.what());
    throw;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw InputError("not an integer: '" + s + "'");
  return v;
}

std::vector<Vertex> parse_list(const std::string& s) {
  std::vector<Vertex> out;
  for (const auto& tok : split(s, ',')) out.push_back(to_int(tok));
  return out;
}

RootedTree parse_tree(const std::string& token) {
  const auto parts = split(token, ':');
  const std::string& kind = parts.empty() ? token : parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw InputError("tree '" + token + "' is missing a parameter");
    return to_int(parts[i]);
  };
  auto arity = [&](std::size_t count) {
    if (parts.size() != count + 1) throw InputError("tree '" + token + "' has wrong arity");
  };
  if (token == "K1") return RootedTree{};
  if (token == "K2") return make_star(1);
  if (kind == "star") {
    arity(1);
    return make_star(arg(1));
  }
  if (kind == "sab") {
    arity(2);
    return make_sab(arg(1), arg(2));
  }
  if (kind == "sb") {
    arity(2);
    const int t = arg(1);
    const int b = arg(2);
    if (t < 1 || b < 0) throw Error(Errc::InvalidSpec, "sb needs t >= 1 and b >= 0");
    return make_subdivided_star({std::vector<int>(static_cast<std::size_t>(b), t)});
  }
  if (kind == "path") {
    arity(1);
    const int t = arg(1);
    return t == 0 ? RootedTree{} : make_sab(1, t);
  }
  throw InputError("unknown tree '" + token + "'");
}

void emit(std::ostream& out, const std::vector<Graph>& graphs, const std::string& format) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out << '\n';
    if (format == "dot") {
      write_dot(out, graphs[i]);
    } else {
      write_edge_list(out, graphs[i]);
    }
  }
}

json to_json(const VerificationReport& r) {
  json cx = json::array();
  for (const Counterexample& c : r.counterexamples) {
    cx.push_back({{"edge_list", c.edges},
                  {"expected", c.expected},
                  {"observed", c.observed},
                  {"replay", c.replay},
                  {"detail", c.detail}});
  }
  return {{"name", r.name},
          {"n", r.n},
          {"r", r.r ? json(*r.r) : json(nullptr)},
          {"status", std::string(to_string(r.status))},
          {"note", r.note},
          {"instances", r.instances},
          {"counterexamples", cx},
          {"runtime_ms", r.runtime_ms}};
}

void write_table(std::ostream& out, const std::vector<VerificationReport>& reports) {
  std::size_t failed = 0;
  std::size_t notes = 0;
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %4s %4s  %-6s %10s %6s  %s\n", "check", "n", "r",
                "status", "instances", "cex", "note");
  out << line;
  for (const VerificationReport& r : reports) {
    if (r.status == Status::Fail) ++failed;
    if (r.status == Status::Note) ++notes;
    const std::string rs = r.r ? std::to_string(*r.r) : "-";
    std::snprintf(line, sizeof line, "%-14s %4d %4s  %-6s %10zu %6zu  ", r.name.c_str(), r.n,
                  rs.c_str(), std::string(to_string(r.status)).c_str(), r.instances,
                  r.counterexamples.size());
    out << line << r.note << '\n';
  }
  for (const VerificationReport& r : reports) {
    for (const Counterexample& c : r.counterexamples) {
      out << "\ncounterexample " << r.name << " n=" << r.n;
      if (r.r) out << " r=" << *r.r;
      out << ": " << c.detail << "\n  expected: " << c.expected << "\n  observed: " << c.observed
          << "\n  replay: uniwiener " << c.replay << " < edges\n"
          << c.edges;
    }
  }
  out << "\nsummary: " << reports.size() << " checks, " << failed << " failed, " << notes
      << " notes\n";
}

std::string delta_line(const Graph& before, const Graph& after) {
  const std::uint64_t wb = wiener(before);
  const std::uint64_t wa = wiener(after);
  return std::to_string(wb) + " " + std::to_string(wa) + " " +
         std::to_string(static_cast<std::int64_t>(wb) - static_cast<std::int64_t>(wa));
}

struct Options {
  int jobs = 0;

  std::string family;
  int g = -1, t = -1, b = -1, m = -1, n = -1, r = -1;
  std::string trees;
  std::string format = "edges";

  std::string input;
  std::string output;
  std::optional<int> vertex;

  std::string op;
  std::string edge;
  std::optional<int> u, v;
  std::string x, y;
  std::string dir = "xy";
  std::optional<int> center, long_branch, short_branch;
  std::optional<int> merge, leaf;

  int nmin = 3;
  int nmax = 10;
  int bound = kDefaultEnumerationBound;
  std::string check = "all";
  bool as_json = false;
  std::string report;
};

int do_construct(const Options& o, std::ostream& out) {
  auto need = [](int value, const char* flag) {
    if (value < 0) throw InputError(std::string("--") + flag + " is required");
    return value;
  };
  std::vector<Graph> graphs;
  if (o.family == "cycle") {
    graphs.push_back(make_cycle(need(o.g, "g")).graph());
  } else if (o.family == "path") {
    graphs.push_back(make_path(need(o.t, "t")));
  } else if (o.family == "star") {
    graphs.push_back(make_star(need(o.b, "b")).to_graph());
  } else if (o.family == "sab") {
    graphs.push_back(make_sab(need(o.b, "b"), need(o.m, "m")).to_graph());
  } else if (o.family == "H") {
    if (o.trees.empty()) throw InputError("--trees is required");
    HComposition spec;
    for (const auto& tok : split(o.trees, ',')) spec.trees.push_back(parse_tree(tok));
    graphs.push_back(make_H(spec).graph());
  } else {
    const ClassKey key{need(o.n, "n"), need(o.r, "r")};
    const auto family = o.family == "theorem1" ? theorem1_family(key) : theorem2_family(key);
    for (const auto& g : family) graphs.push_back(g.graph());
  }
  emit(out, graphs, o.format);
  return kExitOk;
}

int do_wiener(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.input, in);
  if (o.vertex) {
    if (!g.contains(*o.vertex)) throw Error(Errc::VertexOutOfRange, std::to_string(*o.vertex));
    const Transmission t = transmission(g, *o.vertex);
    if (is_infinite(t)) {
      out << "inf\n";
    } else {
      out << std::get<std::uint64_t>(t) << '\n';
    }
    return kExitOk;
  }
  out << wiener(g) << '\n';
  return kExitOk;
}

int do_transform(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(o.input, in);
  auto need = [](const std::optional<int>& value, const char* flag) {
    if (!value) throw InputError(std::string("--") + flag + " is required");
    return *value;
  };
  Graph h;
  if (o.op == "shift") {
    if (o.x.empty() || o.y.empty()) throw InputError("--x and --y are required");
    const ShiftSpec spec(g, need(o.u, "u"), need(o.v, "v"), parse_list(o.x), parse_list(o.y));
    h = shift(spec, o.dir == "xy" ? ShiftDirection::XtoY : ShiftDirection::YtoX);
  } else if (o.op == "bridge") {
    const auto ends = parse_list(o.edge);
    if (ends.size() != 2) throw InputError("--edge wants u,v");
    h = shift_over_bridge(g, {ends[0], ends[1]});
  } else if (o.op == "contract") {
    const UnicyclicGraph ug(g);
    h = (o.u || o.v) ? contract_and_leaf(ug, {need(o.u, "u"), need(o.v, "v")}).graph()
                     : contract_and_leaf(ug).graph();
  } else if (o.op == "rebalance") {
    h = rebalance(UnicyclicGraph(g), need(o.center, "center"), need(o.long_branch, "long"),
                  need(o.short_branch, "short"))
            .graph();
  } else {
    const UnicyclicGraph ug(g);
    h = (o.merge || o.leaf) ? operation_A(ug, {need(o.merge, "merge"), need(o.leaf, "leaf")}).graph()
                            : operation_A(ug).graph();
  }
  if (o.output.empty() || o.output == "-") {
    write_edge_list(out, h);
  } else {
    std::ofstream file(o.output);
    if (!file) throw InputError("cannot write " + o.output);
    write_edge_list(file, h);
  }
  out << delta_line(g, h) << '\n';
  return kExitOk;
}

int do_enumerate(const Options& o, std::ostream& out) {
  if (o.n < 3) throw InputError("--n must be at least 3");
  if (o.format == "count") {
    for (const ClassSummary& s : classify(o.n, o.jobs)) {
      if (o.r >= 0 && s.key.r != o.r) continue;
      out << s.key.n << ' ' << s.key.r << ' ' << s.count << ' ' << s.min_wiener << '\n';
    }
    return kExitOk;
  }
  std::vector<Graph> graphs;
  for (const CodedGraph& c : enumerate_unicyclic(o.n, o.jobs)) {
    if (o.r >= 0 && even_degree_count(c.graph.graph()) != o.r) continue;
    graphs.push_back(c.graph.graph());
  }
  emit(out, graphs, o.format);
  return kExitOk;
}

int do_minimize(const Options& o, std::ostream& out) {
  if (o.n < 0 || o.r < 0) throw InputError("--n and --r are required");
  const ClassSummary s = min_wiener({o.n, o.r}, o.jobs);
  out << "minW=" << s.min_wiener << '\n';
  std::vector<Graph> graphs;
  for (const CodedGraph& c : s.minimizers) graphs.push_back(c.graph.graph());
  emit(out, graphs, "edges");
  return kExitOk;
}

int do_verify(const Options& o, std::ostream& out) {
  static const std::map<std::string, CheckSet> kChecks = {
      {"theorem1", CheckSet::Theorem1}, {"theorem2", CheckSet::Theorem2},
      {"claims", CheckSet::Claims},     {"lemmas", CheckSet::Lemmas},
      {"all", CheckSet::All}};
  if (o.nmax < 3 || o.nmax > o.bound) {
    throw InputError("--n-max must be in 3.." + std::to_string(o.bound) + " (raise with --bound)");
  }
  const auto reports = verify_suite(o.nmin, o.nmax, kChecks.at(o.check), o.jobs);
  if (o.as_json) {
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
  } else {
    write_table(out, reports);
  }
  if (!o.report.empty()) {
    std::ofstream file(o.report);
    if (!file) throw InputError("cannot write " + o.report);
    for (const auto& r : reports) file << to_json(r).dump() << '\n';
  }
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Wiener index toolkit for unicyclic graphs", "uniwiener"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", o.jobs, "worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);

  auto* construct = app.add_subcommand("construct", "build a named graph");
  construct->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "star", "sab", "H", "theorem1", "theorem2"}));
  construct->add_option("--g", o.g, "girth");
  construct->add_option("--t", o.t, "path edges");
  construct->add_option("--b", o.b, "branches or leaves");
  construct->add_option("--m", o.m, "subdivided star edges");
  construct->add_option("--n", o.n);
  construct->add_option("--r", o.r);
  construct->add_option("--trees", o.trees, "K1,K2,star:b,sab:b:m,sb:t:b,path:t");
  construct->add_option("--format", o.format)->check(CLI::IsMember({"edges", "dot"}));

  auto* wiener_cmd = app.add_subcommand("wiener", "Wiener index or transmission");
  wiener_cmd->add_option("-i,--input", o.input);
  wiener_cmd->add_option("--vertex", o.vertex);

  auto* transform = app.add_subcommand("transform", "apply one transform");
  transform->add_option("--op", o.op)
      ->required()
      ->check(CLI::IsMember({"shift", "bridge", "contract", "rebalance", "opA"}));
  transform->add_option("-i,--input", o.input);
  transform->add_option("-o,--output", o.output);
  transform->add_option("--edge", o.edge, "u,v");
  transform->add_option("--u", o.u);
  transform->add_option("--v", o.v);
  transform->add_option("--x", o.x, "X as a comma list");
  transform->add_option("--y", o.y, "Y as a comma list");
  transform->add_option("--dir", o.dir)->check(CLI::IsMember({"xy", "yx"}));
  transform->add_option("--center", o.center);
  transform->add_option("--long", o.long_branch);
  transform->add_option("--short", o.short_branch);
  transform->add_option("--merge", o.merge);
  transform->add_option("--leaf", o.leaf);

  auto* enumerate = app.add_subcommand("enumerate", "all unicyclic graphs of one order");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--r", o.r);
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"edges", "dot", "count"}));

  auto* minimize = app.add_subcommand("minimize", "minimisers of one class");
  minimize->add_option("--n", o.n)->required();
  minimize->add_option("--r", o.r)->required();

  auto* verify = app.add_subcommand("verify", "exhaustive checks");
  verify->add_option("--n-max", o.nmax);
  verify->add_option("--n-min", o.nmin);
  verify->add_option("--bound", o.bound, "largest --n-max accepted");
  verify->add_option("--check", o.check)
      ->check(CLI::IsMember({"theorem1", "theorem2", "claims", "lemmas", "all"}));
  verify->add_flag("--json", o.as_json);
  verify->add_option("--report", o.report, "JSON-lines report file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return do_construct(o, out);
    if (*wiener_cmd) return do_wiener(o, in, out);
    if (*transform) return do_transform(o, in, out);
    if (*enumerate) return do_enumerate(o, out);
    if (*minimize) return do_minimize(o, out);
    if (*verify) return do_verify(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitUsage : kExitPrecondition;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, in, out, err);
}

std::string replay(const Counterexample& c) {
  std::vector<std::string> args;
  std::istringstream words(c.replay);
  for (std::string w; words >> w;) args.push_back(w);
  std::istringstream in(c.edges);
  std::ostringstream out;
  std::ostringstream err;
  run(args, in, out, err);
  const auto lines = split(out.str(), '\n');
  for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
    if (!it->empty()) return *it;
  }
  return err.str();
}

}  // namespace uniwiener::cli
