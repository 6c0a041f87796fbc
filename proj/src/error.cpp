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

#include "uniwiener/error.hpp"

namespace uniwiener {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EdgeCountMismatch: return "EdgeCountMismatch";
    case Errc::NotConnected: return "NotConnected";
    case Errc::Disconnected: return "Disconnected";
    case Errc::GirthTooSmall: return "GirthTooSmall";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::InvalidClassKey: return "InvalidClassKey";
    case Errc::ClassKeyOutOfTheoremRange: return "ClassKeyOutOfTheoremRange";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Unsupported: return "Unsupported";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::TrivialPart: return "TrivialPart";
    case Errc::NotABridge: return "NotABridge";
    case Errc::TrivialBridge: return "TrivialBridge";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ExcludedConfiguration: return "ExcludedConfiguration";
    case Errc::BranchesAlreadyBalanced: return "BranchesAlreadyBalanced";
    case Errc::NotASubdividedStar: return "NotASubdividedStar";
    case Errc::WrongShape: return "WrongShape";
    case Errc::NoLeafNeighbor: return "NoLeafNeighbor";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace uniwiener
