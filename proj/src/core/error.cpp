// Copyright 2026 The treeaut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "error.hpp"

namespace treeaut {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kUnknownState: return "UnknownState";
    case ErrorCode::kBadPermutation: return "BadPermutation";
    case ErrorCode::kMissingAlphabet: return "MissingAlphabet";
    case ErrorCode::kNotCyclic: return "NotCyclic";
    case ErrorCode::kBadSymbol: return "BadSymbol";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kMissingInitial: return "MissingInitial";
    case ErrorCode::kBadComponent: return "BadComponent";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kModuliMismatch: return "ModuliMismatch";
    case ErrorCode::kLevelTooLarge: return "LevelTooLarge";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace treeaut
