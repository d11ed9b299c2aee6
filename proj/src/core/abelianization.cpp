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

#include "abelianization.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"

namespace treeaut {

namespace {

std::optional<std::uint64_t> first_non_unit(
    const EventuallyPeriodicStream& s) {
  const Residue k = s.modulus();
  const auto& pre = s.preperiod();
  for (std::size_t j = 0; j < pre.size(); ++j) {
    if (!is_unit(pre[j], k)) return j;
  }
  const auto& per = s.period();
  for (std::size_t j = 0; j < per.size(); ++j) {
    if (!is_unit(per[j], k)) return pre.size() + j;
  }
  return std::nullopt;
}

struct VectorHash {
  std::size_t operator()(const std::vector<Residue>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Residue x : v) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

Residue difference(const ModVector& w, std::size_t a, std::size_t b) {
  return (w.entries[a] + w.modulus - w.entries[b]) % w.modulus;
}

// Least j with (M^j v)_a != (M^j v)_b, by iterating until M^j v repeats.
std::optional<std::uint64_t> first_difference_generic(
    const IncidenceMatrix& m, ModVector v, std::size_t a, std::size_t b,
    std::size_t max_visited) {
  std::unordered_set<std::vector<Residue>, VectorHash> seen;
  for (std::uint64_t j = 0;; ++j) {
    if (difference(v, a, b) != 0) return j;
    if (!seen.insert(v.entries).second) return std::nullopt;
    if (seen.size() > max_visited) {
      throw Error(ErrorCode::kLimitExceeded,
                  "M^j v did not repeat within " + std::to_string(max_visited) +
                      " vectors");
    }
    v = multiply(m, v);
  }
}

// Over a field the vectors v, Mv, ..., M^d v are dependent, so checking
// j < d = dim M suffices.
std::optional<std::uint64_t> first_difference_field(const IncidenceMatrix& m,
                                                    ModVector v, std::size_t a,
                                                    std::size_t b) {
  const std::size_t d = m.size();
  for (std::uint64_t j = 0; j < d; ++j) {
    if (difference(v, a, b) != 0) return j;
    v = multiply(m, v);
  }
  return std::nullopt;
}

}  // namespace

const char* conjugacy_name(Conjugacy c) noexcept {
  switch (c) {
    case Conjugacy::kConjugate: return "Conjugate";
    case Conjugacy::kNotConjugate: return "NotConjugate";
    case Conjugacy::kUndecided: return "Undecided";
  }
  return "Unknown";
}

LabeledElement with_cyclic_labels(const InitialAutomaton& g) {
  return {g, validate_cyclic(g.automaton())};
}

TransitivityVerdict is_spherically_transitive(const InitialAutomaton& g,
                                              std::size_t max_visited) {
  const AbelianLabels labels = validate_cyclic(g.automaton());
  EventuallyPeriodicStream stream =
      coefficient_stream(incidence_matrix(g.automaton()),
                         abelian_vector(labels, 0), g.initial(), max_visited);
  auto bad = first_non_unit(stream);
  const std::uint64_t checked =
      stream.preperiod().size() + stream.period().size();
  return {!bad, bad, std::move(stream), checked};
}

TransitivityVerdict transitive_k2_fast(const InitialAutomaton& g) {
  if (g.alphabet_size() != 2) {
    throw Error(ErrorCode::kNotBinary,
                "fast path needs alphabet 2, got " +
                    std::to_string(g.alphabet_size()));
  }
  const AbelianLabels labels = validate_cyclic(g.automaton());
  const IncidenceMatrix a = incidence_matrix(g.automaton());
  ModVector w = abelian_vector(labels, 0);
  const std::size_t limit = g.state_count() + 2;
  std::vector<Residue> terms;
  for (std::size_t j = 0; j < limit; ++j) {
    const Residue c = w.entries[g.initial()];
    terms.push_back(c);
    if (c == 0) {
      // Not transitive; the full stream is recovered for reporting only.
      EventuallyPeriodicStream stream =
          coefficient_stream(a, abelian_vector(labels, 0), g.initial());
      return {false, j, std::move(stream), j + 1};
    }
    w = multiply(a, w);
  }
  return {true, std::nullopt, EventuallyPeriodicStream(2, terms, {1}), limit};
}

AbelianEquality abelianization_equal(const LabeledElement& f,
                                     const LabeledElement& g,
                                     EqualityMethod method,
                                     std::size_t max_visited) {
  if (f.element.alphabet_size() != g.element.alphabet_size()) {
    throw Error(ErrorCode::kAlphabetMismatch, "alphabet sizes differ");
  }
  if (f.labels.moduli != g.labels.moduli) {
    throw Error(ErrorCode::kModuliMismatch, "label groups differ");
  }
  const IncidenceMatrix m = block_diagonal(
      incidence_matrix(f.element.automaton()),
      incidence_matrix(g.element.automaton()));
  const std::size_t a = f.element.initial();
  const std::size_t b = f.element.state_count() + g.element.initial();

  AbelianEquality result;
  for (std::size_t c = 0; c < f.labels.components(); ++c) {
    ModVector v = abelian_vector(f.labels, c);
    const ModVector vg = abelian_vector(g.labels, c);
    v.entries.insert(v.entries.end(), vg.entries.begin(), vg.entries.end());

    const bool prime = is_prime(v.modulus);
    if (method == EqualityMethod::kPrimeFast && !prime) {
      throw Error(ErrorCode::kInvalidArgument,
                  "prime fast path requested for modulus " +
                      std::to_string(v.modulus));
    }
    const bool fast = method == EqualityMethod::kPrimeFast ||
                      (method == EqualityMethod::kAuto && prime);
    auto diff = fast ? first_difference_field(m, std::move(v), a, b)
                     : first_difference_generic(m, std::move(v), a, b,
                                                max_visited);
    if (diff && (!result.witness || *diff < *result.witness)) {
      result.equal = false;
      result.witness = diff;
      result.component = c;
    }
  }
  return result;
}

ConjugacyVerdict conjugate(const InitialAutomaton& f,
                           const InitialAutomaton& g) {
  if (f.alphabet_size() != g.alphabet_size()) {
    throw Error(ErrorCode::kAlphabetMismatch, "alphabet sizes differ");
  }
  const TransitivityVerdict tf = is_spherically_transitive(f);
  const TransitivityVerdict tg = is_spherically_transitive(g);
  if (tf.transitive && tg.transitive) {
    const AbelianEquality eq =
        abelianization_equal(with_cyclic_labels(f), with_cyclic_labels(g));
    if (eq.equal) {
      return {Conjugacy::kConjugate,
              "both spherically transitive with equal abelianization"};
    }
    return {Conjugacy::kNotConjugate,
            "both spherically transitive; abelianizations differ at t^" +
                std::to_string(*eq.witness)};
  }
  if (tf.transitive != tg.transitive) {
    return {Conjugacy::kNotConjugate,
            std::string("only the ") + (tf.transitive ? "first" : "second") +
                " element is spherically transitive"};
  }
  return {Conjugacy::kUndecided,
          "neither element is spherically transitive"};
}

RationalSeries rational_form(const LabeledElement& g, std::size_t component) {
  const ModVector v = abelian_vector(g.labels, component);
  const IncidenceMatrix a = incidence_matrix(g.element.automaton());
  const std::size_t n = a.size();

  PolyMatrix system(n, std::vector<IntPolynomial>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      IntPolynomial entry = IntPolynomial::monomial(-BigInt(a(r, s)), 1);
      if (r == s) entry = entry + IntPolynomial::constant(1);
      system[r][s] = std::move(entry);
    }
  }
  PolyMatrix cramer = system;
  for (std::size_t r = 0; r < n; ++r) {
    cramer[r][g.element.initial()] = IntPolynomial::constant(v.entries[r]);
  }
  RationalSeries out;
  out.modulus = v.modulus;
  out.denominator = det_poly(std::move(system)).reduce(v.modulus);
  out.numerator = det_poly(std::move(cramer)).reduce(v.modulus);
  return out;
}

}  // namespace treeaut
