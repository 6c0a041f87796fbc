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

#include <map>
#include <mutex>
#include <string>

#include "uniwiener/enumeration.hpp"
#include "uniwiener/error.hpp"

namespace uniwiener {

namespace {

// Canonical level sequences (1-based levels, root at 1) in reverse
// lexicographic order, starting from the path 1,2,...,n.
std::vector<RootedTree> generate_level_sequences(int size) {
  std::vector<RootedTree> out;
  std::vector<int> level(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) level[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> depths(static_cast<std::size_t>(size));
  while (true) {
    for (int i = 0; i < size; ++i) {
      depths[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i)] - 1;
    }
    out.push_back(RootedTree::from_levels(depths));
    // p: last position with level > 2; q: its parent's position.
    int p = size - 1;
    while (p >= 0 && level[static_cast<std::size_t>(p)] <= 2) --p;
    if (p <= 0) break;
    int q = p - 1;
    while (level[static_cast<std::size_t>(q)] != level[static_cast<std::size_t>(p)] - 1) --q;
    for (int i = p; i < size; ++i) {
      level[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i - (p - q))];
    }
  }
  return out;
}

}  // namespace

const std::vector<RootedTree>& rooted_trees(int size) {
  if (size < 1) throw Error(Errc::InvalidSpec, "rooted trees need at least one vertex");
  if (size > 24) throw Error(Errc::TooLarge, "rooted tree size " + std::to_string(size));
  static std::mutex mutex;
  static std::map<int, std::vector<RootedTree>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(size);
  if (it == cache.end()) it = cache.emplace(size, generate_level_sequences(size)).first;
  return it->second;
}

}  // namespace uniwiener
