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

#ifndef SYMCAP_EXT_RAT_HPP_
#define SYMCAP_EXT_RAT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace symcap {

// Signed exact rational, used for intermediate quantities (differences,
// slopes) that may leave the nonnegative cone.
using Rational = mpq_class;

// Nonnegative rational extended by +infinity. Capacity values are stored in
// this type; where a formula carries a factor pi the stored value is the
// coefficient of pi ("units of pi").
//
// Finite values are always kept in lowest terms with a positive denominator.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(std::int64_t n);  // NOLINT(runtime/explicit)
  ExtRat(std::int64_t num, std::int64_t den);
  explicit ExtRat(const Rational& q);

  static ExtRat infinity();
  // Accepts "p", "p/q" and "inf".
  static ExtRat parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }

  // Finite value; throws DomainError when infinite.
  const Rational& value() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  ExtRat& operator+=(const ExtRat& other);
  ExtRat& operator*=(const ExtRat& other);
  ExtRat& operator/=(const ExtRat& other);

  friend ExtRat operator+(ExtRat a, const ExtRat& b) { return a += b; }
  friend ExtRat operator*(ExtRat a, const ExtRat& b) { return a *= b; }
  friend ExtRat operator/(ExtRat a, const ExtRat& b) { return a /= b; }
  // Truncated subtraction is never silently applied: a - b requires a >= b
  // and a finite b.
  friend ExtRat operator-(const ExtRat& a, const ExtRat& b);

  // 1/0 = inf and 1/inf = 0.
  ExtRat reciprocal() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  std::string to_string() const;
  double to_double() const;

 private:
  Rational value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& q);

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

// floor((k + n - 1) / n): the value of the k-th Ekeland-Hofer capacity of the
// unit ball in dimension 2n, in units of pi.
std::int64_t ball_eh_index(std::int64_t k, std::int64_t n);

}  // namespace symcap

#endif  // SYMCAP_EXT_RAT_HPP_
