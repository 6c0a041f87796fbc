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

#ifndef UNIWIENER_CLOSED_FORMS_HPP_
#define UNIWIENER_CLOSED_FORMS_HPP_

#include <cstdint>

namespace uniwiener {

// W(C_g): k^3 for g = 2k, k(k+1)(2k+1)/2 for g = 2k+1. Throws GirthTooSmall.
std::uint64_t wiener_cycle_closed(int girth);

// W(P_t) for a path with t edges.
std::uint64_t wiener_path_closed(int edges);

// d(u, C_g) = 2 W(C_g) / g: k^2 for g = 2k, k(k+1) for g = 2k+1.
std::uint64_t cycle_transmission_closed(int girth);

// W of two graphs identified at a shared vertex u, from each part's Wiener
// index w_i, order n_i and transmission d_i = d(u, G_i):
//   w1 + w2 + (n1 - 1) d2 + (n2 - 1) d1.
std::uint64_t wiener_vertex_join(std::uint64_t w1, std::uint64_t w2, std::uint64_t n1,
                                 std::uint64_t n2, std::uint64_t d1, std::uint64_t d2);

}  // namespace uniwiener

#endif  // UNIWIENER_CLOSED_FORMS_HPP_
