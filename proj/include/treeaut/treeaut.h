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

/*
 * C interface to the treeaut library.
 *
 * Automata are opaque handles created by ta_parse() or by the algebraic
 * operations and released with ta_free().  Every fallible call returns a
 * ta_status; on failure ta_last_error() describes the problem for the
 * calling thread until its next failing call.  Result structures own
 * library-allocated arrays and must be passed to the matching *_release
 * function.  Strings returned through char** are released with
 * ta_string_free().
 */

#ifndef TREEAUT_TREEAUT_H_
#define TREEAUT_TREEAUT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TREEAUT_BUILDING)
#define TA_API __declspec(dllexport)
#else
#define TA_API __declspec(dllimport)
#endif
#else
#define TA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ta_status {
  TA_OK = 0,
  TA_ERR_SYNTAX = 1,
  TA_ERR_UNKNOWN_STATE = 2,
  TA_ERR_BAD_PERMUTATION = 3,
  TA_ERR_MISSING_ALPHABET = 4,
  TA_ERR_NOT_CYCLIC = 5,
  TA_ERR_BAD_SYMBOL = 6,
  TA_ERR_ALPHABET_MISMATCH = 7,
  TA_ERR_MISSING_INITIAL = 8,
  TA_ERR_BAD_COMPONENT = 9,
  TA_ERR_DIMENSION_MISMATCH = 10,
  TA_ERR_NON_UNIT_CONSTANT_TERM = 11,
  TA_ERR_NOT_BINARY = 12,
  TA_ERR_MODULI_MISMATCH = 13,
  TA_ERR_LEVEL_TOO_LARGE = 14,
  TA_ERR_LIMIT_EXCEEDED = 15,
  TA_ERR_INVALID_ARGUMENT = 16,
  TA_ERR_INTERNAL = 99
} ta_status;

typedef struct ta_automaton ta_automaton;

typedef struct ta_stream {
  uint64_t modulus;
  uint64_t* preperiod;
  size_t preperiod_len;
  uint64_t* period;
  size_t period_len;
} ta_stream;

typedef struct ta_transitivity {
  int transitive;
  /* -1 when transitive. */
  int64_t first_bad_index;
  uint64_t terms_checked;
  ta_stream stream;
} ta_transitivity;

typedef struct ta_rational {
  uint64_t modulus;
  uint64_t* numerator;
  size_t numerator_len;
  uint64_t* denominator;
  size_t denominator_len;
} ta_rational;

typedef struct ta_ab_equality {
  int equal;
  /* Both -1 when equal. */
  int64_t witness;
  int64_t component;
} ta_ab_equality;

typedef enum ta_conjugacy {
  TA_CONJUGATE = 0,
  TA_NOT_CONJUGATE = 1,
  TA_UNDECIDED = 2
} ta_conjugacy;

typedef struct ta_conjugacy_verdict {
  ta_conjugacy verdict;
  char* reason;
} ta_conjugacy_verdict;

typedef struct ta_orbit_report {
  unsigned level;
  uint64_t orbit_count;
  uint64_t max_orbit;
  int transitive;
} ta_orbit_report;

typedef enum ta_equality_method {
  TA_EQUALITY_AUTO = 0,
  TA_EQUALITY_GENERIC = 1,
  TA_EQUALITY_PRIME_FAST = 2
} ta_equality_method;

/* Library and error reporting. */
TA_API const char* ta_version(void);
TA_API const char* ta_status_name(ta_status status);
TA_API const char* ta_last_error(void);
TA_API void ta_string_free(char* s);

/* Construction, serialization, inspection. */
TA_API ta_status ta_parse(const char* text, size_t len, ta_automaton** out);
TA_API ta_status ta_serialize(const ta_automaton* a, char** out);
TA_API ta_status ta_clone(const ta_automaton* a, ta_automaton** out);
TA_API void ta_free(ta_automaton* a);
TA_API size_t ta_alphabet_size(const ta_automaton* a);
TA_API size_t ta_state_count(const ta_automaton* a);
/* State name, valid until the handle is freed; NULL if out of range. */
TA_API const char* ta_state_name(const ta_automaton* a, size_t state);
TA_API int ta_has_initial(const ta_automaton* a);
TA_API ta_status ta_initial_state(const ta_automaton* a, size_t* out);
TA_API ta_status ta_set_initial(ta_automaton* a, const char* name);
TA_API int ta_has_explicit_labels(const ta_automaton* a);
/* 1 when a and b describe the same file contents. */
TA_API int ta_same(const ta_automaton* a, const ta_automaton* b);

/* Labels: out receives ta_state_count(a) residues. */
TA_API ta_status ta_cyclic_labels(const ta_automaton* a, uint64_t* out);
/* Number of label components (explicit labels, else 1 for cyclic). */
TA_API ta_status ta_label_components(const ta_automaton* a, size_t* out);

/* Tree action. */
TA_API ta_status ta_apply(const ta_automaton* a, const uint32_t* word,
                          size_t len, uint32_t* out);
TA_API ta_status ta_section(const ta_automaton* a, const uint32_t* word,
                            size_t len, size_t* out_state);

/* Group operations.  compose(f, g) computes w -> f(g(w)). */
TA_API ta_status ta_compose(const ta_automaton* f, const ta_automaton* g,
                            ta_automaton** out);
TA_API ta_status ta_inverse(const ta_automaton* g, ta_automaton** out);
TA_API ta_status ta_minimize(const ta_automaton* g, ta_automaton** out);
TA_API ta_status ta_equivalent(const ta_automaton* f, const ta_automaton* g,
                               int* out);
TA_API ta_status ta_to_dot(const ta_automaton* a, char** out);

/* Analysis. */
TA_API ta_status ta_transitive(const ta_automaton* g, int fast_binary,
                               ta_transitivity* out);
TA_API void ta_transitivity_release(ta_transitivity* t);
TA_API ta_status ta_coefficients(const ta_automaton* g, size_t component,
                                 ta_stream* out);
TA_API uint64_t ta_stream_term(const ta_stream* s, uint64_t j);
TA_API void ta_stream_release(ta_stream* s);
TA_API ta_status ta_rational_form(const ta_automaton* g, size_t component,
                                  ta_rational* out);
TA_API ta_status ta_series_expand(const ta_rational* r, size_t count,
                                  uint64_t* out);
TA_API void ta_rational_release(ta_rational* r);
TA_API ta_status ta_equal_ab(const ta_automaton* f, const ta_automaton* g,
                             ta_equality_method method, ta_ab_equality* out);
TA_API ta_status ta_conjugate(const ta_automaton* f, const ta_automaton* g,
                              ta_conjugacy_verdict* out);
TA_API const char* ta_conjugacy_name(ta_conjugacy c);
TA_API void ta_conjugacy_release(ta_conjugacy_verdict* v);

/* Brute force.  A cap of 0 selects the default of 10^6 words. */
TA_API ta_status ta_orbit(const ta_automaton* g, unsigned level, uint64_t cap,
                          ta_orbit_report* out);
TA_API ta_status ta_coefficient_bruteforce(const ta_automaton* g,
                                           unsigned level, size_t component,
                                           uint64_t cap, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* TREEAUT_TREEAUT_H_ */
