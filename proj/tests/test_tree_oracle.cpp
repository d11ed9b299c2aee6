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

#include <numeric>
#include <random>

#include "doctest.h"
#include "abelianization.hpp"
#include "error.hpp"
#include "test_support.hpp"
#include "tree_oracle.hpp"

using namespace treeaut;
using namespace treeaut::testing;

namespace {

std::uint64_t permutation_order(const std::vector<std::uint64_t>& perm) {
  std::vector<std::uint64_t> cur(perm.size());
  std::iota(cur.begin(), cur.end(), 0);
  for (std::uint64_t order = 1;; ++order) {
    for (auto& x : cur) x = perm[x];
    bool id = true;
    for (std::size_t i = 0; i < cur.size() && id; ++i) id = cur[i] == i;
    if (id) return order;
  }
}

}  // namespace

TEST_SUITE("level_transitive") {
  TEST_CASE("odometer is a full cycle") {
    for (unsigned n = 0; n <= 6; ++n) {
      LevelOrbitReport r = level_transitive(odometer(), n);
      CHECK(r.transitive);
      CHECK(r.orbit_count == 1);
      CHECK(r.max_orbit == (1u << n));
    }
  }

  TEST_CASE("lamplighter b") {
    InitialAutomaton b = lamplighter("b");
    CHECK(level_transitive(b, 1).transitive);
    CHECK(level_transitive(b, 2).transitive);
    LevelOrbitReport r3 = level_transitive(b, 3);
    CHECK_FALSE(r3.transitive);
    CHECK(r3.orbit_count == 2);
    // 00 -> 10 -> 01 -> 11 -> 00
    CHECK(level_permutation(b, 2) == std::vector<std::uint64_t>{2, 3, 1, 0});
  }

  TEST_CASE("level cap") {
    try {
      level_transitive(odometer(), 10, 1000);
      FAIL("expected LevelTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kLevelTooLarge);
    }
    CHECK(level_transitive(odometer(), 10, 1024).transitive);
  }

  TEST_CASE("orbit sizes partition the level and divide the order") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
      const std::size_t k = 2 + i % 3;
      InitialAutomaton g = random_automaton(rng, k, 4, false);
      const unsigned n = 1 + i % 4;
      auto perm = level_permutation(g, n);
      LevelOrbitReport r = level_transitive(g, n);
      const std::uint64_t order = permutation_order(perm);
      std::uint64_t total = 0;
      for (std::uint64_t s : r.orbit_sizes) {
        total += s;
        CHECK(order % s == 0);
      }
      CHECK(total == perm.size());
      CHECK(r.transitive == (r.orbit_count == 1));
      CHECK(r.transitive == (r.max_orbit == perm.size()));
    }
  }
}

TEST_SUITE("abelian_coefficient_bruteforce") {
  TEST_CASE("examples") {
    CHECK(abelian_coefficient_bruteforce(with_cyclic_labels(odometer()), 0,
                                         0) == 1);
    CHECK(abelian_coefficient_bruteforce(with_cyclic_labels(lamplighter("b")),
                                         2, 0) == 0);
    CHECK(abelian_coefficient_bruteforce(with_cyclic_labels(identity(3)), 5,
                                         0) == 0);
  }

  TEST_CASE("errors") {
    LabeledElement g = with_cyclic_labels(odometer());
    CHECK_THROWS_AS(abelian_coefficient_bruteforce(g, 0, 1), Error);
    CHECK_THROWS_AS(abelian_coefficient_bruteforce(g, 30, 0), Error);
  }

  TEST_CASE("agrees with the incidence-matrix stream") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 60; ++i) {
      const std::size_t k = 2 + i % 3;
      LabeledElement g = with_cyclic_labels(random_automaton(rng, k, 4, true));
      auto s = coefficient_stream(incidence_matrix(g.element.automaton()),
                                  abelian_vector(g.labels, 0),
                                  g.element.initial());
      for (unsigned n = 0; n <= 6; ++n) {
        CHECK(abelian_coefficient_bruteforce(g, n, 0) == s.term(n));
      }
    }
  }
}

TEST_SUITE("spherical transitivity vs orbits") {
  TEST_CASE("units up to n-1 iff transitive on level n") {
    std::mt19937_64 rng(43);
    const std::size_t ks[] = {2, 3, 4, 6};
    for (int i = 0; i < 60; ++i) {
      const std::size_t k = ks[i % 4];
      InitialAutomaton g = random_automaton(rng, k, 3, true);
      TransitivityVerdict v = is_spherically_transitive(g);
      const unsigned max_level = k <= 3 ? 6 : 5;
      bool units = true;
      for (unsigned n = 0; n <= max_level; ++n) {
        if (n > 0) units = units && is_unit(v.stream.term(n - 1), k);
        CHECK(level_transitive(g, n).transitive == units);
      }
    }
  }
}

TEST_SUITE("conjugate_by") {
  TEST_CASE("identity conjugator") {
    CHECK(equivalent(conjugate_by(identity2(), lamplighter("b")),
                     lamplighter("b")));
  }

  TEST_CASE("conjugates of the odometer") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 30; ++i) {
      InitialAutomaton h = random_automaton(rng, 2, 4, false);
      InitialAutomaton c = conjugate_by(h, odometer());
      CHECK(is_spherically_transitive(c).transitive);
      CHECK(abelianization_equal(with_cyclic_labels(c),
                                 with_cyclic_labels(odometer()))
                .equal);
      Word x = random_word(rng, 2, 8);
      CHECK(treeaut::apply(c, treeaut::apply(h, x)) == treeaut::apply(h, treeaut::apply(odometer(), x)));
    }
  }

  TEST_CASE("alphabet mismatch") {
    CHECK_THROWS_AS(conjugate_by(identity(3), odometer()), Error);
  }
}
