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

#include "modular.hpp"

#include <sstream>
#include <unordered_map>
#include <utility>

#include "error.hpp"

namespace treeaut {

namespace {

struct ResidueVectorHash {
  std::size_t operator()(const std::vector<Residue>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Residue x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

Residue mod_of(const BigInt& c, Residue m) {
  BigInt r = c % m;
  if (r < 0) r += m;
  return r.convert_to<Residue>();
}

}  // namespace

// ---------------------------------------------------------------------------
// Residue helpers

Residue gcd_residue(Residue a, Residue b) noexcept {
  while (b != 0) {
    Residue t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_unit(Residue c, Residue m) noexcept {
  return gcd_residue(c % m, m) == 1;
}

bool is_prime(Residue m) noexcept {
  if (m < 2) return false;
  for (Residue d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

Residue inverse_mod(Residue c, Residue m) {
  // Extended Euclid on signed 128-bit values.
  __int128 old_r = static_cast<__int128>(c % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(c) + " is not a unit mod " + std::to_string(m));
  }
  __int128 x = old_s % static_cast<__int128>(m);
  if (x < 0) x += m;
  return static_cast<Residue>(x);
}

// ---------------------------------------------------------------------------
// Streams

EventuallyPeriodicStream::EventuallyPeriodicStream(
    Residue modulus, std::vector<Residue> preperiod,
    std::vector<Residue> period)
    : modulus_(modulus),
      preperiod_(std::move(preperiod)),
      period_(std::move(period)) {
  if (period_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "stream period is empty");
  }
}

Residue EventuallyPeriodicStream::term(std::uint64_t j) const {
  if (j < preperiod_.size()) return preperiod_[j];
  return period_[(j - preperiod_.size()) % period_.size()];
}

std::vector<Residue> EventuallyPeriodicStream::terms(std::size_t count) const {
  std::vector<Residue> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(term(j));
  return out;
}

IncidenceMatrix incidence_matrix(const MealyAutomaton& m) {
  IncidenceMatrix a(m.state_count());
  for (StateIndex q = 0; q < m.state_count(); ++q) {
    for (StateIndex t : m.transitions(q)) ++a(q, t);
  }
  return a;
}

ModVector abelian_vector(const AbelianLabels& labels, std::size_t component) {
  if (component >= labels.components()) {
    throw Error(ErrorCode::kBadComponent,
                "component " + std::to_string(component) + " requested, " +
                    std::to_string(labels.components()) + " available");
  }
  ModVector v{labels.moduli[component], {}};
  v.entries.reserve(labels.labels.size());
  for (const auto& row : labels.labels) v.entries.push_back(row[component]);
  return v;
}

ModVector multiply(const IncidenceMatrix& a, const ModVector& v) {
  if (a.size() != v.entries.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix is " + std::to_string(a.size()) + "x" +
                    std::to_string(a.size()) + ", vector has " +
                    std::to_string(v.entries.size()) + " entries");
  }
  const std::size_t n = a.size();
  ModVector out{v.modulus, std::vector<Residue>(n)};
  for (std::size_t r = 0; r < n; ++r) {
    unsigned __int128 acc = 0;
    for (std::size_t s = 0; s < n; ++s) {
      acc += static_cast<unsigned __int128>(a(r, s)) * v.entries[s];
    }
    out.entries[r] = static_cast<Residue>(acc % v.modulus);
  }
  return out;
}

IncidenceMatrix block_diagonal(const IncidenceMatrix& a,
                               const IncidenceMatrix& b) {
  const std::size_t m = a.size();
  IncidenceMatrix out(m + b.size());
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) out(r, s) = a(r, s);
  }
  for (std::size_t r = 0; r < b.size(); ++r) {
    for (std::size_t s = 0; s < b.size(); ++s) out(m + r, m + s) = b(r, s);
  }
  return out;
}

EventuallyPeriodicStream coefficient_stream(const IncidenceMatrix& a,
                                            const ModVector& v,
                                            StateIndex init,
                                            std::size_t max_visited) {
  if (a.size() != v.entries.size() || init >= a.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "incidence matrix, label vector and initial state disagree");
  }
  if (v.modulus < 2) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 2");
  }
  std::unordered_map<std::vector<Residue>, std::size_t, ResidueVectorHash>
      seen;
  std::vector<Residue> terms;
  ModVector w = v;
  for (Residue& x : w.entries) x %= w.modulus;
  for (std::size_t j = 0;; ++j) {
    auto [it, fresh] = seen.emplace(w.entries, j);
    if (!fresh) {
      const std::size_t r = it->second;
      std::vector<Residue> pre(terms.begin(), terms.begin() + r);
      std::vector<Residue> per(terms.begin() + r, terms.end());
      return EventuallyPeriodicStream(v.modulus, std::move(pre),
                                      std::move(per));
    }
    if (seen.size() > max_visited) {
      throw Error(ErrorCode::kLimitExceeded,
                  "coefficient stream did not repeat within " +
                      std::to_string(max_visited) + " vectors");
    }
    terms.push_back(w.entries[init]);
    w = multiply(a, w);
  }
}

// ---------------------------------------------------------------------------
// Polynomials

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coefficient(i) + b.coefficient(i);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& a,
                                          const IntPolynomial& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial division by zero");
  }
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
  }
  std::vector<BigInt> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  const BigInt& lead = b.coeffs_.back();
  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt& top = rem[i + db];
    if (top % lead != 0) {
      throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
    }
    quot[i] = top / lead;
    if (quot[i] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= quot[i] * b.coeffs_[j];
  }
  for (const auto& r : rem) {
    if (r != 0) {
      throw Error(ErrorCode::kInvalidArgument, "inexact polynomial division");
    }
  }
  return IntPolynomial(std::move(quot));
}

std::vector<Residue> IntPolynomial::reduce(Residue m) const {
  std::vector<Residue> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(mod_of(c, m));
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPolynomial det_poly(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
    }
  }
  if (n == 0) return IntPolynomial::constant(1);

  bool negate = false;
  IntPolynomial prev = IntPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = IntPolynomial::divide_exact(
            m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  IntPolynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

std::vector<Residue> series_expand(const RationalSeries& s, std::size_t count) {
  const Residue m = s.modulus;
  if (s.denominator.empty() || !is_unit(s.denominator[0], m)) {
    throw Error(ErrorCode::kNonUnitConstantTerm,
                "denominator constant term is not a unit mod " +
                    std::to_string(m));
  }
  const Residue d0_inv = inverse_mod(s.denominator[0], m);
  std::vector<Residue> c(count);
  for (std::size_t j = 0; j < count; ++j) {
    unsigned __int128 acc = j < s.numerator.size() ? s.numerator[j] % m : 0;
    // acc - sum d_i c_{j-i}, kept nonnegative.
    for (std::size_t i = 1; i <= j && i < s.denominator.size(); ++i) {
      unsigned __int128 prod =
          static_cast<unsigned __int128>(s.denominator[i] % m) * c[j - i] % m;
      acc = (acc + m - prod) % m;
    }
    c[j] = static_cast<Residue>(acc * d0_inv % m);
  }
  return c;
}

}  // namespace treeaut
