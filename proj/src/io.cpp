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

#include "uniwiener/io.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <sstream>

#include "uniwiener/error.hpp"

namespace uniwiener {

namespace {

long long read_number(std::istream& in, const char* what) {
  long long x = 0;
  if (!(in >> x)) throw Error(Errc::ParseError, std::string("expected ") + what);
  const int next = in.peek();
  if (next != std::char_traits<char>::eof() && !std::isspace(next)) {
    throw Error(Errc::ParseError, std::string("malformed ") + what);
  }
  return x;
}

int to_int(long long x, const char* what) {
  if (x < 0 || x > std::numeric_limits<int>::max()) {
    throw Error(Errc::ParseError, std::string(what) + " out of range: " + std::to_string(x));
  }
  return static_cast<int>(x);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  const int n = to_int(read_number(in, "vertex count"), "vertex count");
  const int m = to_int(read_number(in, "edge count"), "edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const long long u = read_number(in, "edge endpoint");
    const long long v = read_number(in, "edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::VertexOutOfRange,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " with n = " +
                      std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  in >> std::ws;
  if (!in.eof()) throw Error(Errc::ParseError, "trailing data after " + std::to_string(m) + " edges");
  return Graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  write_dot(out, g);
  return out.str();
}

}  // namespace uniwiener
