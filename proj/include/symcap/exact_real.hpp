// Copyright 2026 The symcap Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMCAP_EXACT_REAL_HPP_
#define SYMCAP_EXACT_REAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcap/ext_rat.hpp"

namespace symcap {

// Exact real number of the form N / D where N and D are finite sums
// sum_i c_i * A_i^(1/n_i) with rational c_i and positive integer radicands
// A_i, plus a distinguished value +infinity.
//
// The set is closed under +, -, *, / and under rational powers of monomials
// (values with a single radical term), which covers everything the
// capacity combinators produce except roots of genuine sums; those raise
// UnsupportedError.
//
// Representation invariant: inside one sum no two radicals have a rational
// ratio (like terms are merged on insertion) and all coefficients are
// nonzero. Real radicals of positive rationals with pairwise irrational
// ratios are linearly independent over Q, so a nonempty sum is never zero.
// Signs are therefore decided by interval refinement, which terminates.
class ExactReal {
 public:
  struct Term {
    Rational coeff;
    mpz_class radicand;  // >= 1
    std::uint32_t index = 1;  // value coeff * radicand^(1/index)
  };
  using Sum = std::vector<Term>;

  ExactReal() = default;
  ExactReal(const Rational& q);  // NOLINT(runtime/explicit)
  ExactReal(const ExtRat& q);  // NOLINT(runtime/explicit)
  ExactReal(std::int64_t n) : ExactReal(Rational(static_cast<long>(n))) {}  // NOLINT

  static ExactReal infinity();
  // q^(1/n) for q >= 0.
  static ExactReal root(const Rational& q, std::uint32_t n);

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && num_.empty(); }
  // -1, 0, +1 (infinity is +1).
  int sign() const;
  std::optional<Rational> as_rational() const;
  bool is_monomial() const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b);
  ExactReal& operator+=(const ExactReal& b) { return *this = *this + b; }
  ExactReal& operator*=(const ExactReal& b) { return *this = *this * b; }

  // x^e for a nonnegative monomial x (or x in {0, inf}).
  ExactReal pow(const Rational& exponent) const;

  friend bool operator==(const ExactReal& a, const ExactReal& b);
  friend std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b);

  // Rigorous rational enclosure [lo, hi] of a finite value with width about
  // 2^-bits relative to the magnitude of the terms.
  std::pair<Rational, Rational> enclose(std::uint32_t bits) const;
  double to_double() const;
  std::string to_string() const;

  const Sum& numerator_terms() const { return num_; }

 private:
  Sum num_;
  // Empty means denominator 1; otherwise a sum with positive value and at
  // least two terms.
  Sum den_;
  bool infinite_ = false;

  void normalize();
};

std::ostream& operator<<(std::ostream& os, const ExactReal& x);

ExactReal min(const ExactReal& a, const ExactReal& b);
ExactReal max(const ExactReal& a, const ExactReal& b);

}  // namespace symcap

#endif  // SYMCAP_EXACT_REAL_HPP_
