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

#ifndef SYMCAP_ALG_VALUE_HPP_
#define SYMCAP_ALG_VALUE_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "symcap/ext_rat.hpp"

namespace symcap {

class ExactReal;

// The n-th root of a nonnegative extended rational, radicand^(1/root_index).
// Volume capacities live here: c_vol(E(a_1..a_n)) = (a_1 ... a_n)^(1/n).
//
// Values are normalized so that root_index is minimal; in particular a
// radicand that is a perfect power collapses (4^(1/2) is stored as 2).
// Comparison is exact by cross-powering: q1^(1/n1) <= q2^(1/n2) iff
// q1^n2 <= q2^n1.
class AlgValue {
 public:
  AlgValue() = default;
  AlgValue(const ExtRat& q);  // NOLINT(runtime/explicit)
  AlgValue(std::int64_t n) : AlgValue(ExtRat(n)) {}  // NOLINT(runtime/explicit)
  AlgValue(const ExtRat& radicand, std::uint32_t root_index);

  // Accepts "p/q", "inf", "p^(1/n)" and "(p/q)^(1/n)".
  static AlgValue parse(std::string_view text);

  const ExtRat& radicand() const { return radicand_; }
  std::uint32_t root_index() const { return root_index_; }
  bool is_rational() const { return root_index_ == 1; }
  bool is_infinite() const { return radicand_.is_infinite(); }
  // The ExtRat value when root_index == 1; throws DomainError otherwise.
  const ExtRat& as_ext_rat() const;

  friend AlgValue operator*(const AlgValue& a, const AlgValue& b);
  friend AlgValue operator/(const AlgValue& a, const AlgValue& b);
  // x^(p/q) for p/q >= 0.
  AlgValue pow(const Rational& exponent) const;

  friend bool operator==(const AlgValue& a, const AlgValue& b);
  friend std::strong_ordering operator<=>(const AlgValue& a, const AlgValue& b);

  ExactReal to_exact() const;
  std::string to_string() const;
  double to_double() const;

 private:
  void normalize();

  ExtRat radicand_;
  std::uint32_t root_index_ = 1;
};

std::ostream& operator<<(std::ostream& os, const AlgValue& v);

}  // namespace symcap

#endif  // SYMCAP_ALG_VALUE_HPP_
