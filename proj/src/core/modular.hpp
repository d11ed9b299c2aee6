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

// Exact arithmetic over Z/mZ and Z[t] backing the abelianization
// computations: incidence matrices, the eventually periodic coefficient
// stream (A^j v)_init, fraction-free determinants of polynomial matrices and
// power-series expansion of rational series.

#ifndef TREEAUT_CORE_MODULAR_HPP_
#define TREEAUT_CORE_MODULAR_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "automaton.hpp"

namespace treeaut {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultVisitCap = 10'000'000;

// Entry (r, s) counts the symbols a with delta(r, a) = s.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint64_t operator()(std::size_t r, std::size_t s) const {
    return entries_[r * n_ + s];
  }
  std::uint64_t& operator()(std::size_t r, std::size_t s) {
    return entries_[r * n_ + s];
  }

  friend bool operator==(const IncidenceMatrix&,
                         const IncidenceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> entries_;
};

struct ModVector {
  Residue modulus = 2;
  std::vector<Residue> entries;

  friend bool operator==(const ModVector&, const ModVector&) = default;
};

class EventuallyPeriodicStream {
 public:
  EventuallyPeriodicStream(Residue modulus, std::vector<Residue> preperiod,
                           std::vector<Residue> period);

  Residue modulus() const noexcept { return modulus_; }
  const std::vector<Residue>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Residue>& period() const noexcept { return period_; }

  Residue term(std::uint64_t j) const;
  std::vector<Residue> terms(std::size_t count) const;

  friend bool operator==(const EventuallyPeriodicStream&,
                         const EventuallyPeriodicStream&) = default;

 private:
  Residue modulus_;
  std::vector<Residue> preperiod_;
  std::vector<Residue> period_;
};

// Integer polynomial in t, coefficients in ascending degree, no trailing
// zeros.  The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  static IntPolynomial constant(const BigInt& c);
  // c * t^degree.
  static IntPolynomial monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
  }

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Exact quotient a / b; throws Error(kInvalidArgument) if b is zero or
  // does not divide a in Z[t].
  static IntPolynomial divide_exact(const IntPolynomial& a,
                                    const IntPolynomial& b);

  // Coefficients reduced to 0..m-1, trailing zeros removed.
  std::vector<Residue> reduce(Residue m) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

// A quotient numerator / denominator of polynomials over Z/mZ, both stored
// reduced with trailing zeros trimmed.
struct RationalSeries {
  Residue modulus = 2;
  std::vector<Residue> numerator;
  std::vector<Residue> denominator;

  friend bool operator==(const RationalSeries&,
                         const RationalSeries&) = default;
};

IncidenceMatrix incidence_matrix(const MealyAutomaton& m);

// Entry q is the `component`-th coordinate of state q's label.
ModVector abelian_vector(const AbelianLabels& labels, std::size_t component);

// A * v (mod v.modulus).
ModVector multiply(const IncidenceMatrix& a, const ModVector& v);

// diag(a, b).
IncidenceMatrix block_diagonal(const IncidenceMatrix& a,
                               const IncidenceMatrix& b);

// The stream j -> (A^j v)_init mod m, found by iterating v <- A v until a
// vector repeats.  Throws Error(kLimitExceeded) after `max_visited`
// distinct vectors.
EventuallyPeriodicStream coefficient_stream(
    const IncidenceMatrix& a, const ModVector& v, StateIndex init,
    std::size_t max_visited = kDefaultVisitCap);

// Exact determinant by Bareiss fraction-free elimination in Z[t].
IntPolynomial det_poly(PolyMatrix m);

// First `count` coefficients of numerator / denominator in Z/mZ[[t]].
std::vector<Residue> series_expand(const RationalSeries& s, std::size_t count);

// Modular helpers.
Residue gcd_residue(Residue a, Residue b) noexcept;
bool is_unit(Residue c, Residue m) noexcept;
bool is_prime(Residue m) noexcept;
// Inverse of c mod m; throws Error(kInvalidArgument) if c is not a unit.
Residue inverse_mod(Residue c, Residue m);

}  // namespace treeaut

#endif  // TREEAUT_CORE_MODULAR_HPP_
