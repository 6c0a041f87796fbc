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

#ifndef UNIWIENER_CANONICAL_HPP_
#define UNIWIENER_CANONICAL_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "uniwiener/graph.hpp"

namespace uniwiener {

// Isomorphism-invariant byte string: order, size, then the sorted edge list of
// the canonical relabelling, all as big-endian 16-bit words. Byte order is
// the ordering used for every sorted output.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

// Canonisation covers connected graphs with at most one cycle (trees and
// unicyclic graphs). Trees are rooted at their centre; unicyclic graphs use the
// dihedrally smallest sequence of hanging-tree codes around the cycle.
// Throws NotConnected, Unsupported (two or more cycles), TooLarge (n > 65535).

// perm[old] = new.
std::vector<Vertex> canonical_labeling(const Graph& g);
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);
Graph canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

}  // namespace uniwiener

#endif  // UNIWIENER_CANONICAL_HPP_
