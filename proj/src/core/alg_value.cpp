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

#include "symcap/alg_value.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <ostream>

#include "symcap/errors.hpp"
#include "symcap/exact_real.hpp"

namespace symcap {

namespace {

Rational qpow(const Rational& q, std::uint64_t e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  return r;
}

bool perfect_root(const mpz_class& a, std::uint32_t k, mpz_class& root) {
  return mpz_root(root.get_mpz_t(), a.get_mpz_t(), k) != 0;
}

}  // namespace

AlgValue::AlgValue(const ExtRat& q) : radicand_(q), root_index_(1) {}

AlgValue::AlgValue(const ExtRat& radicand, std::uint32_t root_index)
    : radicand_(radicand), root_index_(root_index) {
  if (root_index == 0) throw DomainError("root index must be positive");
  normalize();
}

void AlgValue::normalize() {
  if (radicand_.is_infinite() || radicand_.is_zero()) {
    root_index_ = 1;
    return;
  }
  mpz_class a = radicand_.numerator();
  mpz_class b = radicand_.denominator();
  bool changed = true;
  while (changed && root_index_ > 1) {
    changed = false;
    std::uint32_t n = root_index_;
    for (std::uint32_t p = 2; p <= n; ++p) {
      if (n % p != 0) continue;
      mpz_class ra, rb;
      if (perfect_root(a, p, ra) && perfect_root(b, p, rb)) {
        a = ra;
        b = rb;
        root_index_ /= p;
        changed = true;
        break;
      }
    }
  }
  radicand_ = ExtRat(Rational(a, b));
}

AlgValue AlgValue::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  auto caret = text.find("^(1/");
  if (caret == std::string_view::npos) return AlgValue(ExtRat::parse(text));
  std::string_view base = text.substr(0, caret);
  std::string_view tail = text.substr(caret + 4);
  if (tail.empty() || tail.back() != ')') throw ParseError("bad root form: " + std::string(text));
  tail.remove_suffix(1);
  if (base.size() >= 2 && base.front() == '(' && base.back() == ')') {
    base = base.substr(1, base.size() - 2);
  }
  Rational n = parse_rational(tail);
  if (n.get_den() != 1 || sgn(n) <= 0 || !n.get_num().fits_uint_p()) {
    throw ParseError("bad root index: " + std::string(text));
  }
  return AlgValue(ExtRat::parse(base), static_cast<std::uint32_t>(n.get_num().get_ui()));
}

const ExtRat& AlgValue::as_ext_rat() const {
  if (root_index_ != 1) throw DomainError("irrational AlgValue " + to_string());
  return radicand_;
}

AlgValue operator*(const AlgValue& a, const AlgValue& b) {
  if (a.is_infinite() || b.is_infinite()) return AlgValue(a.radicand_ * b.radicand_);
  std::uint32_t l = std::lcm(a.root_index_, b.root_index_);
  Rational r = qpow(a.radicand_.value(), l / a.root_index_) *
               qpow(b.radicand_.value(), l / b.root_index_);
  return AlgValue(ExtRat(r), l);
}

AlgValue operator/(const AlgValue& a, const AlgValue& b) {
  return a * AlgValue(b.radicand_.reciprocal(), b.root_index_);
}

AlgValue AlgValue::pow(const Rational& exponent) const {
  if (sgn(exponent) < 0) throw DomainError("negative exponent");
  if (sgn(exponent) == 0) return AlgValue(1);
  if (is_infinite() || radicand_.is_zero()) return *this;
  const mpz_class& p = exponent.get_num();
  const mpz_class& q = exponent.get_den();
  if (!p.fits_uint_p() || !q.fits_uint_p()) throw UnsupportedError("exponent too large");
  Rational r = qpow(radicand_.value(), p.get_ui());
  return AlgValue(ExtRat(r), root_index_ * static_cast<std::uint32_t>(q.get_ui()));
}

bool operator==(const AlgValue& a, const AlgValue& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const AlgValue& a, const AlgValue& b) {
  if (a.is_infinite() || b.is_infinite()) return a.radicand_ <=> b.radicand_;
  Rational lhs = qpow(a.radicand_.value(), b.root_index_);
  Rational rhs = qpow(b.radicand_.value(), a.root_index_);
  return cmp(lhs, rhs) <=> 0;
}

ExactReal AlgValue::to_exact() const {
  if (is_infinite()) return ExactReal::infinity();
  return ExactReal::root(radicand_.value(), root_index_);
}

std::string AlgValue::to_string() const {
  if (root_index_ == 1) return radicand_.to_string();
  std::string base = radicand_.to_string();
  if (radicand_.denominator() != 1) base = "(" + base + ")";
  return base + "^(1/" + std::to_string(root_index_) + ")";
}

double AlgValue::to_double() const {
  return std::pow(radicand_.to_double(), 1.0 / static_cast<double>(root_index_));
}

std::ostream& operator<<(std::ostream& os, const AlgValue& v) { return os << v.to_string(); }

}  // namespace symcap
