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

#ifndef TREEAUT_CORE_ERROR_HPP_
#define TREEAUT_CORE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeaut {

// Numeric values are mirrored by ta_status in treeaut.h; keep them in sync.
enum class ErrorCode : int {
  kSyntax = 1,
  kUnknownState = 2,
  kBadPermutation = 3,
  kMissingAlphabet = 4,
  kNotCyclic = 5,
  kBadSymbol = 6,
  kAlphabetMismatch = 7,
  kMissingInitial = 8,
  kBadComponent = 9,
  kDimensionMismatch = 10,
  kNonUnitConstantTerm = 11,
  kNotBinary = 12,
  kModuliMismatch = 13,
  kLevelTooLarge = 14,
  kLimitExceeded = 15,
  kInvalidArgument = 16,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based source line.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error(ErrorCode::kSyntax,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace treeaut

#endif  // TREEAUT_CORE_ERROR_HPP_
