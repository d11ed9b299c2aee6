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

#include "tree_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace treeaut {

namespace {

std::uint64_t checked_level_size(std::size_t k, unsigned level,
                                 std::uint64_t cap) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < level; ++i) {
    if (total > cap / k) {
      throw Error(ErrorCode::kLevelTooLarge,
                  std::to_string(k) + "^" + std::to_string(level) +
                      " words exceed the cap of " + std::to_string(cap));
    }
    total *= k;
  }
  if (total > cap) {
    throw Error(ErrorCode::kLevelTooLarge, "level exceeds the word cap");
  }
  return total;
}

void decode(std::uint64_t index, std::size_t k, Word& word) {
  for (std::size_t i = word.size(); i-- > 0;) {
    word[i] = static_cast<Symbol>(index % k);
    index /= k;
  }
}

std::uint64_t encode(const Word& word, std::size_t k) {
  std::uint64_t index = 0;
  for (Symbol s : word) index = index * k + s;
  return index;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::uint64_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint64_t> size_;
};

}  // namespace

std::vector<std::uint64_t> level_permutation(const InitialAutomaton& g,
                                             unsigned level,
                                             std::uint64_t cap) {
  const std::size_t k = g.alphabet_size();
  const std::uint64_t total = checked_level_size(k, level, cap);
  std::vector<std::uint64_t> perm(total);
  Word word(level);
  for (std::uint64_t i = 0; i < total; ++i) {
    decode(i, k, word);
    perm[i] = encode(treeaut::apply(g, word), k);
  }
  return perm;
}

LevelOrbitReport level_transitive(const InitialAutomaton& g, unsigned level,
                                  std::uint64_t cap) {
  const auto perm = level_permutation(g, level, cap);
  DisjointSets sets(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) sets.unite(i, perm[i]);

  LevelOrbitReport report;
  report.level = level;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (done[root]) continue;
    done[root] = true;
    report.orbit_sizes.push_back(sets.size_of(root));
  }
  report.orbit_count = report.orbit_sizes.size();
  report.max_orbit = report.orbit_sizes.empty()
                         ? 0
                         : *std::max_element(report.orbit_sizes.begin(),
                                             report.orbit_sizes.end());
  report.transitive = report.orbit_count == 1;
  return report;
}

Residue abelian_coefficient_bruteforce(const LabeledElement& g, unsigned level,
                                       std::size_t component,
                                       std::uint64_t cap) {
  if (component >= g.labels.components()) {
    throw Error(ErrorCode::kBadComponent,
                "component " + std::to_string(component) + " out of range");
  }
  const std::size_t k = g.element.alphabet_size();
  const Residue m = g.labels.moduli[component];
  const std::uint64_t total = checked_level_size(k, level, cap);
  Residue sum = 0;
  Word word(level);
  for (std::uint64_t i = 0; i < total; ++i) {
    decode(i, k, word);
    const StateIndex q = section(g.element, word).initial();
    sum = (sum + g.labels.labels[q][component]) % m;
  }
  return sum;
}

InitialAutomaton conjugate_by(const InitialAutomaton& h,
                              const InitialAutomaton& g) {
  return minimize(compose(compose(h, g), inverse(h)));
}

}  // namespace treeaut
