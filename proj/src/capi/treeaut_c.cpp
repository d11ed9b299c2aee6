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

#include "treeaut/treeaut.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "../core/abelianization.hpp"
#include "../core/automaton.hpp"
#include "../core/error.hpp"
#include "../core/modular.hpp"
#include "../core/tree_oracle.hpp"

struct ta_automaton {
  treeaut::AutomatonFile file;
};

namespace {

using namespace treeaut;

thread_local std::string g_last_error;

ta_status fail(ta_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
ta_status guarded(Fn&& fn) {
  try {
    fn();
    return TA_OK;
  } catch (const Error& e) {
    return fail(static_cast<ta_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TA_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

InitialAutomaton element_of(const ta_automaton* a) {
  require(a != nullptr, "null automaton handle");
  if (!a->file.initial) {
    throw Error(ErrorCode::kMissingInitial, "automaton has no initial state");
  }
  return InitialAutomaton(a->file.automaton, *a->file.initial);
}

LabeledElement labeled_of(const ta_automaton* a) {
  return {element_of(a), effective_labels(a->file)};
}

ta_automaton* wrap(InitialAutomaton g, std::optional<AbelianLabels> labels) {
  return new ta_automaton{
      AutomatonFile{g.automaton(), g.initial(), std::move(labels)}};
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

uint64_t* copy_array(const std::vector<Residue>& v) {
  auto* out = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) *
                                                 (v.empty() ? 1 : v.size())));
  if (!out) throw std::bad_alloc();
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

ta_stream to_c(const EventuallyPeriodicStream& s) {
  ta_stream out{};
  out.modulus = s.modulus();
  out.preperiod = copy_array(s.preperiod());
  out.preperiod_len = s.preperiod().size();
  out.period = copy_array(s.period());
  out.period_len = s.period().size();
  return out;
}

}  // namespace

extern "C" {

const char* ta_version(void) { return "1.0.0"; }

const char* ta_status_name(ta_status status) {
  switch (status) {
    case TA_OK: return "OK";
    case TA_ERR_INTERNAL: return "InternalError";
    default:
      if (status >= TA_ERR_SYNTAX && status <= TA_ERR_INVALID_ARGUMENT) {
        return error_code_name(static_cast<ErrorCode>(status));
      }
      return "Unknown";
  }
}

const char* ta_last_error(void) { return g_last_error.c_str(); }

void ta_string_free(char* s) { std::free(s); }

ta_status ta_parse(const char* text, size_t len, ta_automaton** out) {
  return guarded([&] {
    require(out != nullptr && (text != nullptr || len == 0),
            "null argument");
    *out = new ta_automaton{parse_automaton(std::string_view(text, len))};
  });
}

ta_status ta_serialize(const ta_automaton* a, char** out) {
  return guarded([&] {
    require(a && out, "null argument");
    *out = copy_string(serialize_automaton(a->file));
  });
}

ta_status ta_clone(const ta_automaton* a, ta_automaton** out) {
  return guarded([&] {
    require(a && out, "null argument");
    *out = new ta_automaton{a->file};
  });
}

void ta_free(ta_automaton* a) { delete a; }

size_t ta_alphabet_size(const ta_automaton* a) {
  return a ? a->file.automaton.alphabet_size() : 0;
}

size_t ta_state_count(const ta_automaton* a) {
  return a ? a->file.automaton.state_count() : 0;
}

const char* ta_state_name(const ta_automaton* a, size_t state) {
  if (!a || state >= a->file.automaton.state_count()) return nullptr;
  return a->file.automaton.name(static_cast<StateIndex>(state)).c_str();
}

int ta_has_initial(const ta_automaton* a) {
  return a && a->file.initial ? 1 : 0;
}

ta_status ta_initial_state(const ta_automaton* a, size_t* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = element_of(a).initial();
  });
}

ta_status ta_set_initial(ta_automaton* a, const char* name) {
  return guarded([&] {
    require(a && name, "null argument");
    auto q = a->file.automaton.find(name);
    if (!q) {
      throw Error(ErrorCode::kUnknownState,
                  std::string("unknown state '") + name + "'");
    }
    a->file.initial = *q;
  });
}

int ta_has_explicit_labels(const ta_automaton* a) {
  return a && a->file.labels ? 1 : 0;
}

int ta_same(const ta_automaton* a, const ta_automaton* b) {
  return a && b && a->file == b->file ? 1 : 0;
}

ta_status ta_cyclic_labels(const ta_automaton* a, uint64_t* out) {
  return guarded([&] {
    require(a && out, "null argument");
    const AbelianLabels labels = validate_cyclic(a->file.automaton);
    for (std::size_t q = 0; q < labels.labels.size(); ++q) {
      out[q] = labels.labels[q][0];
    }
  });
}

ta_status ta_label_components(const ta_automaton* a, size_t* out) {
  return guarded([&] {
    require(a && out, "null argument");
    *out = effective_labels(a->file).components();
  });
}

ta_status ta_apply(const ta_automaton* a, const uint32_t* word, size_t len,
                   uint32_t* out) {
  return guarded([&] {
    require((word && out) || len == 0, "null argument");
    const Word result = treeaut::apply(element_of(a), std::span(word, len));
    std::copy(result.begin(), result.end(), out);
  });
}

ta_status ta_section(const ta_automaton* a, const uint32_t* word, size_t len,
                     size_t* out_state) {
  return guarded([&] {
    require(out_state && (word || len == 0), "null argument");
    *out_state = section(element_of(a), std::span(word, len)).initial();
  });
}

ta_status ta_compose(const ta_automaton* f, const ta_automaton* g,
                     ta_automaton** out) {
  return guarded([&] {
    require(f && g && out, "null argument");
    if (f->file.labels || g->file.labels) {
      LabeledElement r = compose(labeled_of(f), labeled_of(g));
      *out = wrap(std::move(r.element), std::move(r.labels));
    } else {
      *out = wrap(compose(element_of(f), element_of(g)), std::nullopt);
    }
  });
}

ta_status ta_inverse(const ta_automaton* g, ta_automaton** out) {
  return guarded([&] {
    require(g && out, "null argument");
    if (g->file.labels) {
      LabeledElement r = inverse(labeled_of(g));
      *out = wrap(std::move(r.element), std::move(r.labels));
    } else {
      *out = wrap(inverse(element_of(g)), std::nullopt);
    }
  });
}

ta_status ta_minimize(const ta_automaton* g, ta_automaton** out) {
  return guarded([&] {
    require(g && out, "null argument");
    if (g->file.labels) {
      LabeledElement r = minimize(labeled_of(g));
      *out = wrap(std::move(r.element), std::move(r.labels));
    } else {
      *out = wrap(minimize(element_of(g)), std::nullopt);
    }
  });
}

ta_status ta_equivalent(const ta_automaton* f, const ta_automaton* g,
                        int* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = equivalent(element_of(f), element_of(g)) ? 1 : 0;
  });
}

ta_status ta_to_dot(const ta_automaton* a, char** out) {
  return guarded([&] {
    require(a && out, "null argument");
    *out = copy_string(to_dot(a->file.automaton, a->file.initial));
  });
}

ta_status ta_transitive(const ta_automaton* g, int fast_binary,
                        ta_transitivity* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const InitialAutomaton e = element_of(g);
    const TransitivityVerdict v =
        fast_binary ? transitive_k2_fast(e) : is_spherically_transitive(e);
    ta_transitivity t{};
    t.transitive = v.transitive ? 1 : 0;
    t.first_bad_index =
        v.first_bad_index ? static_cast<int64_t>(*v.first_bad_index) : -1;
    t.terms_checked = v.terms_checked;
    t.stream = to_c(v.stream);
    *out = t;
  });
}

void ta_transitivity_release(ta_transitivity* t) {
  if (t) ta_stream_release(&t->stream);
}

ta_status ta_coefficients(const ta_automaton* g, size_t component,
                          ta_stream* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const LabeledElement e = labeled_of(g);
    *out = to_c(coefficient_stream(incidence_matrix(e.element.automaton()),
                                   abelian_vector(e.labels, component),
                                   e.element.initial()));
  });
}

uint64_t ta_stream_term(const ta_stream* s, uint64_t j) {
  if (!s || s->period_len == 0) return 0;
  if (j < s->preperiod_len) return s->preperiod[j];
  return s->period[(j - s->preperiod_len) % s->period_len];
}

void ta_stream_release(ta_stream* s) {
  if (!s) return;
  std::free(s->preperiod);
  std::free(s->period);
  s->preperiod = s->period = nullptr;
  s->preperiod_len = s->period_len = 0;
}

ta_status ta_rational_form(const ta_automaton* g, size_t component,
                           ta_rational* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const RationalSeries r = rational_form(labeled_of(g), component);
    ta_rational c{};
    c.modulus = r.modulus;
    c.numerator = copy_array(r.numerator);
    c.numerator_len = r.numerator.size();
    c.denominator = copy_array(r.denominator);
    c.denominator_len = r.denominator.size();
    *out = c;
  });
}

ta_status ta_series_expand(const ta_rational* r, size_t count, uint64_t* out) {
  return guarded([&] {
    require(r && (out || count == 0), "null argument");
    RationalSeries s;
    s.modulus = r->modulus;
    s.numerator.assign(r->numerator, r->numerator + r->numerator_len);
    s.denominator.assign(r->denominator, r->denominator + r->denominator_len);
    const auto terms = series_expand(s, count);
    std::copy(terms.begin(), terms.end(), out);
  });
}

void ta_rational_release(ta_rational* r) {
  if (!r) return;
  std::free(r->numerator);
  std::free(r->denominator);
  r->numerator = r->denominator = nullptr;
  r->numerator_len = r->denominator_len = 0;
}

ta_status ta_equal_ab(const ta_automaton* f, const ta_automaton* g,
                      ta_equality_method method, ta_ab_equality* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    EqualityMethod m = EqualityMethod::kAuto;
    if (method == TA_EQUALITY_GENERIC) m = EqualityMethod::kGeneric;
    if (method == TA_EQUALITY_PRIME_FAST) m = EqualityMethod::kPrimeFast;
    // Alphabet sizes are compared before labels are derived.
    const InitialAutomaton ef = element_of(f);
    const InitialAutomaton eg = element_of(g);
    if (ef.alphabet_size() != eg.alphabet_size()) {
      throw Error(ErrorCode::kAlphabetMismatch, "alphabet sizes differ");
    }
    const AbelianEquality eq =
        abelianization_equal(labeled_of(f), labeled_of(g), m);
    out->equal = eq.equal ? 1 : 0;
    out->witness = eq.witness ? static_cast<int64_t>(*eq.witness) : -1;
    out->component = eq.component ? static_cast<int64_t>(*eq.component) : -1;
  });
}

ta_status ta_conjugate(const ta_automaton* f, const ta_automaton* g,
                       ta_conjugacy_verdict* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const ConjugacyVerdict v = conjugate(element_of(f), element_of(g));
    ta_conjugacy_verdict c{};
    c.verdict = v.verdict == Conjugacy::kConjugate      ? TA_CONJUGATE
                : v.verdict == Conjugacy::kNotConjugate ? TA_NOT_CONJUGATE
                                                        : TA_UNDECIDED;
    c.reason = copy_string(v.reason);
    *out = c;
  });
}

const char* ta_conjugacy_name(ta_conjugacy c) {
  switch (c) {
    case TA_CONJUGATE: return conjugacy_name(Conjugacy::kConjugate);
    case TA_NOT_CONJUGATE: return conjugacy_name(Conjugacy::kNotConjugate);
    case TA_UNDECIDED: return conjugacy_name(Conjugacy::kUndecided);
  }
  return "Unknown";
}

void ta_conjugacy_release(ta_conjugacy_verdict* v) {
  if (!v) return;
  std::free(v->reason);
  v->reason = nullptr;
}

ta_status ta_orbit(const ta_automaton* g, unsigned level, uint64_t cap,
                   ta_orbit_report* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const LevelOrbitReport r = level_transitive(
        element_of(g), level, cap == 0 ? kDefaultLevelCap : cap);
    out->level = r.level;
    out->orbit_count = r.orbit_count;
    out->max_orbit = r.max_orbit;
    out->transitive = r.transitive ? 1 : 0;
  });
}

ta_status ta_coefficient_bruteforce(const ta_automaton* g, unsigned level,
                                    size_t component, uint64_t cap,
                                    uint64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = abelian_coefficient_bruteforce(
        labeled_of(g), level, component, cap == 0 ? kDefaultLevelCap : cap);
  });
}

}  // extern "C"
