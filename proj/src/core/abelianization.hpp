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

// Decision procedures on finite-state elements of iterated wreath products
// of cyclic groups, driven by the abelianization stream
//   <g, t^j> = sum over |w| = j of label(g_w) = (A^j v)_init.

#ifndef TREEAUT_CORE_ABELIANIZATION_HPP_
#define TREEAUT_CORE_ABELIANIZATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "automaton.hpp"
#include "modular.hpp"

namespace treeaut {

struct TransitivityVerdict {
  bool transitive = false;
  // Least j whose stream term is not a unit mod k.
  std::optional<std::uint64_t> first_bad_index;
  EventuallyPeriodicStream stream;
  // Number of stream terms the decision looked at.
  std::uint64_t terms_checked = 0;
};

enum class EqualityMethod {
  kAuto,       // prime fast path where the modulus is prime, else generic
  kGeneric,    // cycle detection on M^j v
  kPrimeFast,  // j <= m + n - 1 only; every modulus must be prime
};

struct AbelianEquality {
  bool equal = true;
  // Least j with differing coefficients, and the component it occurs in.
  std::optional<std::uint64_t> witness;
  std::optional<std::size_t> component;
};

enum class Conjugacy { kConjugate, kNotConjugate, kUndecided };

const char* conjugacy_name(Conjugacy c) noexcept;

struct ConjugacyVerdict {
  Conjugacy verdict = Conjugacy::kUndecided;
  std::string reason;
};

// Cyclic labels of g's automaton with g as the labelled element.
LabeledElement with_cyclic_labels(const InitialAutomaton& g);

TransitivityVerdict is_spherically_transitive(
    const InitialAutomaton& g, std::size_t max_visited = kDefaultVisitCap);

// Binary alphabets only: g is transitive iff its first n + 2 coefficients
// are all 1, n the number of states.
TransitivityVerdict transitive_k2_fast(const InitialAutomaton& g);

AbelianEquality abelianization_equal(
    const LabeledElement& f, const LabeledElement& g,
    EqualityMethod method = EqualityMethod::kAuto,
    std::size_t max_visited = kDefaultVisitCap);

// Conjugacy in the iterated wreath product of Z/kZ.  Only pairs with at
// least one spherically transitive element are decided.
ConjugacyVerdict conjugate(const InitialAutomaton& f,
                           const InitialAutomaton& g);

// <g, t^j> as numerator / det(I - At) over Z/m_component, by Cramer's rule
// on (I - At) x = v.
RationalSeries rational_form(const LabeledElement& g, std::size_t component);

}  // namespace treeaut

#endif  // TREEAUT_CORE_ABELIANIZATION_HPP_
