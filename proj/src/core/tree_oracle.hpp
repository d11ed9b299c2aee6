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

// Brute-force ground truth by explicit enumeration of tree levels.  Every
// routine here is exponential in the level and guarded by a word cap.

#ifndef TREEAUT_CORE_TREE_ORACLE_HPP_
#define TREEAUT_CORE_TREE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "automaton.hpp"

namespace treeaut {

inline constexpr std::uint64_t kDefaultLevelCap = 1'000'000;

struct LevelOrbitReport {
  unsigned level = 0;
  std::uint64_t orbit_count = 0;
  std::uint64_t max_orbit = 0;
  bool transitive = false;
  // Orbit sizes in order of each orbit's least word.
  std::vector<std::uint64_t> orbit_sizes;
};

// Words of length `level` are numbered with the first symbol most
// significant.  Throws Error(kLevelTooLarge) when k^level > cap.
std::vector<std::uint64_t> level_permutation(
    const InitialAutomaton& g, unsigned level,
    std::uint64_t cap = kDefaultLevelCap);

LevelOrbitReport level_transitive(const InitialAutomaton& g, unsigned level,
                                  std::uint64_t cap = kDefaultLevelCap);

// Sum over all words w of length `level` of the label of g_w.
Residue abelian_coefficient_bruteforce(const LabeledElement& g, unsigned level,
                                       std::size_t component,
                                       std::uint64_t cap = kDefaultLevelCap);

// h g h^-1, minimized.
InitialAutomaton conjugate_by(const InitialAutomaton& h,
                              const InitialAutomaton& g);

}  // namespace treeaut

#endif  // TREEAUT_CORE_TREE_ORACLE_HPP_
