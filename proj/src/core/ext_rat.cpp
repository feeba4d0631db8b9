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

#include "symcap/ext_rat.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "symcap/errors.hpp"

namespace symcap {

namespace {

void require_nonnegative(const Rational& q) {
  if (sgn(q) < 0) throw DomainError("ExtRat must be nonnegative, got " + q.get_str());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExtRat::ExtRat(std::int64_t n) : value_(static_cast<long>(n)) { require_nonnegative(value_); }

ExtRat::ExtRat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("ExtRat with zero denominator");
  value_ = Rational(static_cast<long>(num), 1) / Rational(static_cast<long>(den), 1);
  value_.canonicalize();
  require_nonnegative(value_);
}

ExtRat::ExtRat(const Rational& q) : value_(q) {
  value_.canonicalize();
  require_nonnegative(value_);
}

ExtRat ExtRat::infinity() {
  ExtRat r;
  r.infinite_ = true;
  return r;
}

ExtRat ExtRat::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return ExtRat(parse_rational(text));
}

const Rational& ExtRat::value() const {
  if (infinite_) throw DomainError("value() of an infinite ExtRat");
  return value_;
}

mpz_class ExtRat::numerator() const { return value().get_num(); }
mpz_class ExtRat::denominator() const { return value().get_den(); }

ExtRat& ExtRat::operator+=(const ExtRat& other) {
  if (infinite_ || other.infinite_) {
    *this = infinity();
  } else {
    value_ += other.value_;
  }
  return *this;
}

ExtRat& ExtRat::operator*=(const ExtRat& other) {
  if (infinite_ || other.infinite_) {
    if (is_zero() || other.is_zero()) throw DomainError("0 * inf is undefined");
    *this = infinity();
  } else {
    value_ *= other.value_;
  }
  return *this;
}

ExtRat& ExtRat::operator/=(const ExtRat& other) {
  return *this *= other.reciprocal();
}

ExtRat operator-(const ExtRat& a, const ExtRat& b) {
  if (b.infinite_) throw DomainError("subtracting infinity");
  if (a.infinite_) return a;
  Rational d = a.value_ - b.value_;
  if (sgn(d) < 0) throw DomainError("ExtRat subtraction would be negative");
  return ExtRat(d);
}

ExtRat ExtRat::reciprocal() const {
  if (infinite_) return ExtRat(0);
  if (sgn(value_) == 0) return infinity();
  return ExtRat(Rational(1) / value_);
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

std::string ExtRat::to_string() const {
  if (infinite_) return "inf";
  return rational_to_string(value_);
}

double ExtRat::to_double() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return value_.get_d();
}

std::ostream& operator<<(std::ostream& os, const ExtRat& q) { return os << q.to_string(); }

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : trim(text.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den));
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::int64_t ball_eh_index(std::int64_t k, std::int64_t n) {
  if (k < 1 || n < 1) throw DomainError("ball_eh_index needs k, n >= 1");
  return (k + n - 1) / n;
}

}  // namespace symcap
