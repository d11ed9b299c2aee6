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

#include <random>

#include "doctest.h"
#include "abelianization.hpp"
#include "error.hpp"
#include "test_support.hpp"
#include "tree_oracle.hpp"

using namespace treeaut;
using namespace treeaut::testing;

namespace {

template <typename Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidArgument;
}

InitialAutomaton random_transitive(std::mt19937_64& rng, std::size_t k,
                                   std::size_t max_states) {
  for (;;) {
    InitialAutomaton g = random_automaton(rng, k, max_states, true);
    if (is_spherically_transitive(g).transitive) return g;
  }
}

LabeledElement labeled(const std::string& text) {
  AutomatonFile f = parse_automaton(text);
  return {InitialAutomaton(f.automaton, f.initial.value()),
          effective_labels(f)};
}

}  // namespace

TEST_SUITE("is_spherically_transitive") {
  TEST_CASE("odometer") {
    TransitivityVerdict v = is_spherically_transitive(odometer());
    CHECK(v.transitive);
    CHECK_FALSE(v.first_bad_index);
    CHECK(v.stream.preperiod().empty());
    CHECK(v.stream.period() == std::vector<Residue>{1});
  }

  TEST_CASE("lamplighter") {
    TransitivityVerdict a = is_spherically_transitive(lamplighter("a"));
    CHECK_FALSE(a.transitive);
    CHECK(a.first_bad_index == 0u);
    TransitivityVerdict b = is_spherically_transitive(lamplighter("b"));
    CHECK_FALSE(b.transitive);
    CHECK(b.first_bad_index == 2u);
    CHECK(b.stream.terms(5) == std::vector<Residue>{1, 1, 0, 0, 0});
  }

  TEST_CASE("non-unit inside the period") {
    // k = 4: label 2 at the root is not a unit even though it is nonzero.
    InitialAutomaton g = element(
        "alphabet 4\nstate a perm 2 3 0 1 to a a a a\ninitial a\n");
    TransitivityVerdict v = is_spherically_transitive(g);
    CHECK_FALSE(v.transitive);
    CHECK(v.first_bad_index == 0u);
  }

  TEST_CASE("first bad index scans the period after the preperiod") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
      InitialAutomaton g = random_automaton(rng, 2 + i % 5, 4, true);
      TransitivityVerdict v = is_spherically_transitive(g);
      const Residue k = g.alphabet_size();
      const auto terms = v.stream.terms(v.stream.preperiod().size() +
                                        v.stream.period().size());
      std::optional<std::uint64_t> first;
      for (std::size_t j = 0; j < terms.size() && !first; ++j) {
        if (!is_unit(terms[j], k)) first = j;
      }
      CHECK(v.first_bad_index == first);
      CHECK(v.transitive == !first);
    }
  }

  TEST_CASE("non-cyclic input") {
    InitialAutomaton g =
        element("alphabet 3\nstate s perm 0 2 1 to s s s\ninitial s\n");
    CHECK(error_of([&] { is_spherically_transitive(g); }) ==
          ErrorCode::kNotCyclic);
  }
}

TEST_SUITE("transitive_k2_fast") {
  TEST_CASE("odometer checks j = 0..3") {
    TransitivityVerdict v = transitive_k2_fast(odometer());
    CHECK(v.transitive);
    CHECK(v.terms_checked == 4);
    CHECK(v.stream.preperiod() == std::vector<Residue>{1, 1, 1, 1});
    CHECK(v.stream.period() == std::vector<Residue>{1});
  }

  TEST_CASE("lamplighter b fails at j = 2") {
    TransitivityVerdict v = transitive_k2_fast(lamplighter("b"));
    CHECK_FALSE(v.transitive);
    CHECK(v.first_bad_index == 2u);
    CHECK(v.terms_checked == 3);
  }

  TEST_CASE("binary only") {
    CHECK(error_of([] { transitive_k2_fast(identity(3)); }) ==
          ErrorCode::kNotBinary);
  }

  TEST_CASE("agrees with the generic decision") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
      InitialAutomaton g = random_automaton(rng, 2, 4, true);
      TransitivityVerdict fast = transitive_k2_fast(g);
      TransitivityVerdict slow = is_spherically_transitive(g);
      CHECK(fast.transitive == slow.transitive);
      CHECK(fast.first_bad_index == slow.first_bad_index);
      CHECK(fast.terms_checked <= g.state_count() + 2);
    }
  }
}

TEST_SUITE("abelianization_equal") {
  TEST_CASE("examples") {
    LabeledElement odo = with_cyclic_labels(odometer());
    CHECK(abelianization_equal(odo, odo).equal);
    CHECK(abelianization_equal(odo, with_cyclic_labels(odometer_c())).equal);
    AbelianEquality e =
        abelianization_equal(odo, with_cyclic_labels(lamplighter("b")));
    CHECK_FALSE(e.equal);
    CHECK(e.witness == 2u);
    CHECK(e.component == 0u);
  }

  TEST_CASE("generic path on a composite modulus") {
    // Identical streams mod 4 from different automata.
    LabeledElement f = labeled(
        "alphabet 2\nstate a perm 0 1 to a a\ninitial a\n"
        "abelian 4\nlabel a 3\n");
    LabeledElement g = labeled(
        "alphabet 2\nstate b perm 0 1 to c c\nstate c perm 0 1 to c c\n"
        "initial b\nabelian 4\nlabel b 3\nlabel c 3\n");
    // f: 3, 6, 12, ... = 3, 2, 0, 0 mod 4;  g: same sums.
    CHECK(abelianization_equal(f, g, EqualityMethod::kGeneric).equal);
    LabeledElement h = labeled(
        "alphabet 2\nstate b perm 0 1 to c c\nstate c perm 0 1 to c c\n"
        "initial b\nabelian 4\nlabel b 3\nlabel c 2\n");
    AbelianEquality e = abelianization_equal(f, h);
    CHECK_FALSE(e.equal);
    CHECK(e.witness == 1u);
    CHECK(error_of([&] {
            abelianization_equal(f, g, EqualityMethod::kPrimeFast);
          }) == ErrorCode::kInvalidArgument);
  }

  TEST_CASE("multi-component witness is the least failing index") {
    LabeledElement f = labeled(
        "alphabet 2\nstate a perm 0 1 to a a\ninitial a\n"
        "abelian 2 3\nlabel a 1 1\n");
    LabeledElement g = labeled(
        "alphabet 2\nstate a perm 0 1 to a a\ninitial a\n"
        "abelian 2 3\nlabel a 1 2\n");
    AbelianEquality e = abelianization_equal(f, g);
    CHECK_FALSE(e.equal);
    CHECK(e.witness == 0u);
    CHECK(e.component == 1u);
  }

  TEST_CASE("errors") {
    LabeledElement odo = with_cyclic_labels(odometer());
    LabeledElement tern = with_cyclic_labels(identity(3));
    CHECK(error_of([&] { abelianization_equal(odo, tern); }) ==
          ErrorCode::kAlphabetMismatch);
    LabeledElement other = labeled(
        "alphabet 2\nstate a perm 0 1 to a a\ninitial a\nabelian 3\nlabel a 1\n");
    CHECK(error_of([&] { abelianization_equal(odo, other); }) ==
          ErrorCode::kModuliMismatch);
  }

  TEST_CASE("equivalence relation and coefficient agreement") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 150; ++i) {
      const std::size_t k = 2 + i % 3;
      std::vector<LabeledElement> xs;
      for (int j = 0; j < 3; ++j) {
        xs.push_back(with_cyclic_labels(random_automaton(rng, k, 3, true)));
      }
      auto eq = [&](int a, int b) {
        return abelianization_equal(xs[a], xs[b]).equal;
      };
      CHECK(eq(0, 0));
      CHECK(eq(0, 1) == eq(1, 0));
      if (eq(0, 1) && eq(1, 2)) CHECK(eq(0, 2));
      // The difference sequence obeys the characteristic recurrence of the
      // 6x6 (at most) block matrix, so 8 coefficients decide equality.
      bool same = true;
      for (unsigned n = 0; n < 8; ++n) {
        same = same && abelian_coefficient_bruteforce(xs[0], n, 0) ==
                           abelian_coefficient_bruteforce(xs[1], n, 0);
      }
      CHECK(eq(0, 1) == same);
    }
  }

  TEST_CASE("prime fast path agrees with cycle detection") {
    std::mt19937_64 rng(34);
    const Residue primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 200; ++i) {
      const std::size_t k = 2 + i % 3;
      const Residue p = primes[i % 4];
      std::uniform_int_distribution<Residue> res(0, p - 1);
      auto make = [&] {
        InitialAutomaton g = random_automaton(rng, k, 3, false);
        AbelianLabels lab{{p}, {}};
        for (std::size_t q = 0; q < g.state_count(); ++q) {
          lab.labels.push_back({res(rng)});
        }
        return LabeledElement{g, lab};
      };
      LabeledElement f = make();
      // Half the pairs share their abelianization by construction.
      LabeledElement g = i % 2 ? make() : minimize(f);
      AbelianEquality fast =
          abelianization_equal(f, g, EqualityMethod::kPrimeFast);
      AbelianEquality slow =
          abelianization_equal(f, g, EqualityMethod::kGeneric);
      CHECK(fast.equal == slow.equal);
      CHECK(fast.witness == slow.witness);
      if (i % 2 == 0) CHECK(fast.equal);
    }
  }
}

TEST_SUITE("conjugate") {
  TEST_CASE("examples") {
    CHECK(conjugate(odometer(), odometer_c()).verdict == Conjugacy::kConjugate);
    CHECK(conjugate(odometer(), lamplighter("b")).verdict ==
          Conjugacy::kNotConjugate);
    ConjugacyVerdict u = conjugate(lamplighter("a"), lamplighter("b"));
    CHECK(u.verdict == Conjugacy::kUndecided);
    CHECK_FALSE(u.reason.empty());
  }

  TEST_CASE("errors") {
    CHECK(error_of([] { conjugate(odometer(), identity(3)); }) ==
          ErrorCode::kAlphabetMismatch);
    InitialAutomaton bad =
        element("alphabet 3\nstate s perm 0 2 1 to s s s\ninitial s\n");
    CHECK(error_of([&] { conjugate(identity(3), bad); }) ==
          ErrorCode::kNotCyclic);
  }

  TEST_CASE("transitive elements are conjugate to their conjugates") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 40; ++i) {
      const std::size_t k = 2 + i % 2;
      InitialAutomaton g = random_transitive(rng, k, 3);
      InitialAutomaton h = random_automaton(rng, k, 3, true);
      CHECK(conjugate(g, conjugate_by(h, g)).verdict == Conjugacy::kConjugate);
    }
  }

  TEST_CASE("undecided only when neither is transitive") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 100; ++i) {
      InitialAutomaton f = random_automaton(rng, 2, 3, true);
      InitialAutomaton g = random_automaton(rng, 2, 3, true);
      ConjugacyVerdict v = conjugate(f, g);
      const bool tf = is_spherically_transitive(f).transitive;
      const bool tg = is_spherically_transitive(g).transitive;
      CHECK((v.verdict == Conjugacy::kUndecided) == (!tf && !tg));
      // All transitive binary elements share the stream 1, 1, 1, ...
      if (tf && tg) CHECK(v.verdict == Conjugacy::kConjugate);
    }
  }
}

TEST_SUITE("rational_form") {
  TEST_CASE("odometer") {
    RationalSeries r = rational_form(with_cyclic_labels(odometer()), 0);
    CHECK(r.modulus == 2);
    CHECK(r.numerator == std::vector<Residue>{1});
    CHECK(r.denominator == std::vector<Residue>{1, 1});
    CHECK(series_expand(r, 6) == std::vector<Residue>(6, 1));
  }

  TEST_CASE("identity") {
    for (std::size_t k : {2, 3, 5}) {
      RationalSeries r = rational_form(with_cyclic_labels(identity(k)), 0);
      CHECK(r.numerator.empty());
      CHECK(r.denominator == std::vector<Residue>{1});
    }
  }

  TEST_CASE("lamplighter b") {
    RationalSeries r = rational_form(with_cyclic_labels(lamplighter("b")), 0);
    CHECK(series_expand(r, 6) == std::vector<Residue>{1, 1, 0, 0, 0, 0});
    for (unsigned n = 0; n < 6; ++n) {
      CHECK(series_expand(r, 6)[n] ==
            abelian_coefficient_bruteforce(with_cyclic_labels(lamplighter("b")),
                                           n, 0));
    }
  }

  TEST_CASE("bad component") {
    CHECK(error_of([] {
            rational_form(with_cyclic_labels(odometer()), 1);
          }) == ErrorCode::kBadComponent);
  }

  TEST_CASE("expansion reproduces the coefficient stream") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
      const std::size_t k = 2 + i % 5;
      LabeledElement g = with_cyclic_labels(random_automaton(rng, k, 4, true));
      if (i % 3 == 0) {
        // Explicit labels over a composite modulus.
        g.labels = AbelianLabels{{6}, {}};
        for (std::size_t q = 0; q < g.element.state_count(); ++q) {
          g.labels.labels.push_back({(q * 5 + i) % 6});
        }
      }
      auto s = coefficient_stream(incidence_matrix(g.element.automaton()),
                                  abelian_vector(g.labels, 0),
                                  g.element.initial());
      const std::size_t n =
          s.preperiod().size() + 2 * s.period().size() + 4;
      CHECK(series_expand(rational_form(g, 0), n) == s.terms(n));
    }
  }
}
