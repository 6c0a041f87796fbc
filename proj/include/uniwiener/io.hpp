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

#ifndef UNIWIENER_IO_HPP_
#define UNIWIENER_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "uniwiener/graph.hpp"

namespace uniwiener {

// Edge-list text: "n m", then m lines "u v". Reading accepts either endpoint
// order and any whitespace; writing emits normalised, sorted edges with "\n".
// Throws Error{ParseError}, or the Graph constructor's errors.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// `graph G {`, one statement per node, one `u -- v;` per edge, `}`.
void write_dot(std::ostream& out, const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace uniwiener

#endif  // UNIWIENER_IO_HPP_
