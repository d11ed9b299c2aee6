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

// Invertible Mealy automata over the alphabet {0, ..., k-1} and the tree
// automorphisms they compute.  A word is read left to right; its first
// symbol is consumed at the root.

#ifndef TREEAUT_CORE_AUTOMATON_HPP_
#define TREEAUT_CORE_AUTOMATON_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treeaut {

using Symbol = std::uint32_t;
using StateIndex = std::uint32_t;
using Residue = std::uint64_t;
using Word = std::vector<Symbol>;

// A bijection of {0, ..., k-1} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  // Throws Error(kInvalidArgument) unless `images` is a bijection.
  explicit Permutation(std::vector<Symbol> images);

  static Permutation identity(std::size_t k);
  // i -> i + shift (mod k).
  static Permutation rotation(std::size_t k, std::size_t shift);
  static bool is_bijection(std::span<const Symbol> images) noexcept;

  std::size_t size() const noexcept { return images_.size(); }
  Symbol operator()(Symbol a) const { return images_[a]; }
  std::span<const Symbol> images() const noexcept { return images_; }

  Permutation inverse() const;
  // The exponent e with images[i] = i + e (mod k), if this is a power of
  // the standard k-cycle (0 1 ... k-1).
  std::optional<std::size_t> rotation_amount() const noexcept;

  // (p * q)(a) = p(q(a)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Symbol> images_;
};

// The automaton (Q, A, delta, lambda) with states in declaration order.
class MealyAutomaton {
 public:
  // Validates shapes, target indices and name uniqueness; throws
  // Error(kInvalidArgument) otherwise.
  MealyAutomaton(std::size_t alphabet_size, std::vector<std::string> names,
                 std::vector<std::vector<StateIndex>> delta,
                 std::vector<Permutation> output);

  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t state_count() const noexcept { return names_.size(); }

  const std::string& name(StateIndex q) const { return names_[q]; }
  std::span<const std::string> names() const noexcept { return names_; }
  std::optional<StateIndex> find(std::string_view name) const;

  StateIndex next(StateIndex q, Symbol a) const { return delta_[q][a]; }
  std::span<const StateIndex> transitions(StateIndex q) const {
    return delta_[q];
  }
  const Permutation& output(StateIndex q) const { return output_[q]; }

  friend bool operator==(const MealyAutomaton&,
                         const MealyAutomaton&) = default;

 private:
  std::size_t k_;
  std::vector<std::string> names_;
  std::vector<std::vector<StateIndex>> delta_;
  std::vector<Permutation> output_;
};

// A Mealy automaton with a distinguished state; computes one tree
// automorphism.  The automaton itself is shared and immutable.
class InitialAutomaton {
 public:
  InitialAutomaton(std::shared_ptr<const MealyAutomaton> automaton,
                   StateIndex initial);
  InitialAutomaton(MealyAutomaton automaton, StateIndex initial);

  const MealyAutomaton& automaton() const noexcept { return *automaton_; }
  const std::shared_ptr<const MealyAutomaton>& shared() const noexcept {
    return automaton_;
  }
  StateIndex initial() const noexcept { return initial_; }
  std::size_t alphabet_size() const noexcept {
    return automaton_->alphabet_size();
  }
  std::size_t state_count() const noexcept {
    return automaton_->state_count();
  }

 private:
  std::shared_ptr<const MealyAutomaton> automaton_;
  StateIndex initial_;
};

// Per-state images in a finite abelian group Z/m_1 x ... x Z/m_r.
struct AbelianLabels {
  std::vector<Residue> moduli;
  // labels[q][i] is the i-th coordinate of state q, in 0..moduli[i]-1.
  std::vector<std::vector<Residue>> labels;

  std::size_t components() const noexcept { return moduli.size(); }
  // Throws Error(kInvalidArgument) on a malformed table for `states` states.
  void check(std::size_t states) const;

  friend bool operator==(const AbelianLabels&,
                         const AbelianLabels&) = default;
};

// Contents of an automaton file.
struct AutomatonFile {
  MealyAutomaton automaton;
  std::optional<StateIndex> initial;
  std::optional<AbelianLabels> labels;

  friend bool operator==(const AutomatonFile&,
                         const AutomatonFile&) = default;
};

// An element together with the labels used for its abelianization.
struct LabeledElement {
  InitialAutomaton element;
  AbelianLabels labels;
};

AutomatonFile parse_automaton(std::string_view text);
std::string serialize_automaton(const AutomatonFile& file);

// Labels mod k when every output is a power of the standard k-cycle;
// throws Error(kNotCyclic) naming the first offending state otherwise.
AbelianLabels validate_cyclic(const MealyAutomaton& m);

// Explicit labels when present, else validate_cyclic.
AbelianLabels effective_labels(const AutomatonFile& file);

Word apply(const InitialAutomaton& g, std::span<const Symbol> word);
InitialAutomaton section(const InitialAutomaton& g,
                         std::span<const Symbol> word);
InitialAutomaton inverse(const InitialAutomaton& g);
// Computes w -> f(g(w)) on the reachable part of the product automaton.
InitialAutomaton compose(const InitialAutomaton& f, const InitialAutomaton& g);
InitialAutomaton minimize(const InitialAutomaton& g);
bool equivalent(const InitialAutomaton& f, const InitialAutomaton& g);

// Label-carrying variants.  Labels compose additively and invert by
// negation; minimize never merges states with different labels.
LabeledElement compose(const LabeledElement& f, const LabeledElement& g);
LabeledElement inverse(const LabeledElement& g);
LabeledElement minimize(const LabeledElement& g);

// Moore diagram in Graphviz dot syntax; the initial state, if given, is
// drawn with a double circle.
std::string to_dot(const MealyAutomaton& m,
                   std::optional<StateIndex> initial = std::nullopt);

}  // namespace treeaut

#endif  // TREEAUT_CORE_AUTOMATON_HPP_
