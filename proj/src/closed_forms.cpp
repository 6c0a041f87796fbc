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

#include "uniwiener/closed_forms.hpp"

#include <string>

#include "uniwiener/error.hpp"

namespace uniwiener {

namespace {

void require_girth(int girth) {
  if (girth < 3) throw Error(Errc::GirthTooSmall, "girth " + std::to_string(girth));
}

}  // namespace

std::uint64_t wiener_cycle_closed(int girth) {
  require_girth(girth);
  const std::uint64_t k = static_cast<std::uint64_t>(girth / 2);
  if (girth % 2 == 0) return k * k * k;
  return k * (k + 1) * (2 * k + 1) / 2;
}

std::uint64_t wiener_path_closed(int edges) {
  if (edges < 0) throw Error(Errc::InvalidSpec, "negative path length");
  const std::uint64_t t = static_cast<std::uint64_t>(edges);
  return t * (t + 1) * (t + 2) / 6;
}

std::uint64_t cycle_transmission_closed(int girth) {
  require_girth(girth);
  return 2 * wiener_cycle_closed(girth) / static_cast<std::uint64_t>(girth);
}

std::uint64_t wiener_vertex_join(std::uint64_t w1, std::uint64_t w2, std::uint64_t n1,
                                 std::uint64_t n2, std::uint64_t d1, std::uint64_t d2) {
  if (n1 == 0 || n2 == 0) throw Error(Errc::InvalidSpec, "parts must be nonempty");
  return w1 + w2 + (n1 - 1) * d2 + (n2 - 1) * d1;
}

}  // namespace uniwiener
