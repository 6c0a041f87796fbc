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

#ifndef UNIWIENER_ERROR_HPP_
#define UNIWIENER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace uniwiener {

// Every failure raised by the library carries one of these codes.
enum class Errc {
  ParseError,
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EdgeCountMismatch,
  NotConnected,
  Disconnected,
  GirthTooSmall,
  TooFewVertices,
  InvalidSpec,
  InvalidClassKey,
  ClassKeyOutOfTheoremRange,
  EmptyClass,
  TooLarge,
  Unsupported,
  InvalidPartition,
  TrivialPart,
  NotABridge,
  TrivialBridge,
  PreconditionViolated,
  ExcludedConfiguration,
  BranchesAlreadyBalanced,
  NotASubdividedStar,
  WrongShape,
  NoLeafNeighbor,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace uniwiener

#endif  // UNIWIENER_ERROR_HPP_
