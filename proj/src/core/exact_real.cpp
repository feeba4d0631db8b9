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

#include "symcap/exact_real.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "symcap/errors.hpp"

namespace symcap {

namespace {

using Term = ExactReal::Term;
using Sum = ExactReal::Sum;

// Trial-division bound for pulling n-th powers out of radicands.
constexpr std::uint32_t kExtractBound = 2000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kExtractBound, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p < kExtractBound; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (std::uint32_t m = p * p; m < kExtractBound; m += p) composite[m] = true;
    }
    return out;
  }();
  return primes;
}

bool perfect_power(const mpz_class& a, std::uint32_t k, mpz_class* root) {
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
  if (exact != 0 && root != nullptr) *root = r;
  return exact != 0;
}

mpz_class ipow(const mpz_class& base, std::uint64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// coeff * A^(1/n) with A a positive integer, brought to canonical shape:
// small n-th power factors pulled out and the index made minimal.
Term canonical_term(Rational coeff, mpz_class radicand, std::uint32_t index) {
  if (radicand <= 0) throw std::logic_error("radicand must be positive");
  bool changed = true;
  while (changed && index > 1) {
    changed = false;
    for (std::uint32_t p : prime_factors(index)) {
      mpz_class r;
      if (perfect_power(radicand, p, &r)) {
        radicand = r;
        index /= p;
        changed = true;
        break;
      }
    }
  }
  if (index > 1) {
    mpz_class rest = radicand, kept = 1;
    for (std::uint32_t p : small_primes()) {
      if (ipow(mpz_class(p), index) > rest) break;
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
      const mpz_class pz(p);
      const std::uint64_t e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t());
      if (e == 0) continue;
      coeff *= mpz_class(ipow(pz, e / index));
      kept *= ipow(pz, e % index);
    }
    // Large cofactors usually come from inverting a radical, so they are
    // often pure powers S^k.
    if (rest > 1 && mpz_perfect_power_p(rest.get_mpz_t()) != 0) {
      mpz_class base = rest;
      std::uint64_t k = 1;
      for (bool found = true; found;) {
        found = false;
        const std::size_t bits = mpz_sizeinbase(base.get_mpz_t(), 2);
        for (std::uint32_t p : small_primes()) {
          if (p > bits) break;
          mpz_class r;
          if (perfect_power(base, p, &r)) {
            base = r;
            k *= p;
            found = true;
            break;
          }
        }
      }
      coeff *= mpz_class(ipow(base, k / index));
      rest = ipow(base, k % index);
    }
    radicand = rest * kept;
    for (std::uint32_t p : prime_factors(index)) {
      mpz_class r;
      while (index % p == 0 && perfect_power(radicand, p, &r)) {
        radicand = r;
        index /= p;
      }
    }
  }
  if (index == 1) {
    coeff *= radicand;
    radicand = 1;
  }
  if (radicand == 1) index = 1;
  return Term{coeff, radicand, index};
}

// coeff * q^(1/n) for a positive rational q.
Term make_term(const Rational& coeff, const Rational& q, std::uint32_t n) {
  if (n == 1) return Term{coeff * q, 1, 1};
  const mpz_class& a = q.get_num();
  const mpz_class& b = q.get_den();
  // q^(1/n) = (a b^(n-1))^(1/n) / b
  Rational c = coeff / Rational(b);
  return canonical_term(c, a * ipow(b, n - 1), n);
}

// rho with radical(t) = rho * radical(u), if rational.
std::optional<Rational> radical_ratio(const Term& t, const Term& u) {
  if (t.index == 1 && u.index == 1) return Rational(1);
  if (t.index == 1 || u.index == 1) return std::nullopt;
  if (t.index == u.index && t.radicand == u.radicand) return Rational(1);
  std::uint32_t l = std::lcm(t.index, u.index);
  mpz_class x = ipow(t.radicand, l / t.index);
  mpz_class y = ipow(u.radicand, l / u.index);
  Rational q(x, y);
  q.canonicalize();
  mpz_class rn, rd;
  if (!perfect_power(q.get_num(), l, &rn) || !perfect_power(q.get_den(), l, &rd)) {
    return std::nullopt;
  }
  return Rational(rn, rd);
}

void add_term(Sum& s, const Term& t) {
  if (sgn(t.coeff) == 0) return;
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (auto rho = radical_ratio(t, *it)) {
      it->coeff += t.coeff * *rho;
      if (sgn(it->coeff) == 0) s.erase(it);
      return;
    }
  }
  s.push_back(t);
}

Sum add(const Sum& a, const Sum& b) {
  Sum out = a;
  for (const Term& t : b) add_term(out, t);
  return out;
}

Sum negate(Sum s) {
  for (Term& t : s) t.coeff = -t.coeff;
  return s;
}

Term mul_terms(const Term& t, const Term& u) {
  Rational c = t.coeff * u.coeff;
  if (t.index == 1) return Term{c, u.radicand, u.index};
  if (u.index == 1) return Term{c, t.radicand, t.index};
  std::uint32_t l = std::lcm(t.index, u.index);
  mpz_class r = ipow(t.radicand, l / t.index) * ipow(u.radicand, l / u.index);
  return canonical_term(c, r, l);
}

Sum mul(const Sum& a, const Sum& b) {
  Sum out;
  for (const Term& t : a) {
    for (const Term& u : b) add_term(out, mul_terms(t, u));
  }
  return out;
}

Sum one() { return Sum{Term{Rational(1), 1, 1}}; }

const Sum& or_one(const Sum& den, const Sum& unit) { return den.empty() ? unit : den; }

Term invert(const Term& t) {
  if (t.index == 1) return Term{Rational(1) / t.coeff, 1, 1};
  return make_term(Rational(1) / t.coeff, Rational(mpz_class(1), t.radicand), t.index);
}

void radical_bounds(const mpz_class& a, std::uint32_t n, std::uint32_t bits, Rational& lo,
                    Rational& hi) {
  if (n == 1) {
    lo = hi = Rational(a);
    return;
  }
  mpz_class scaled = a << (static_cast<mp_bitcnt_t>(n) * bits);
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), n);
  mpz_class denom = mpz_class(1) << bits;
  lo = Rational(r, denom);
  hi = exact != 0 ? lo : Rational(r + 1, denom);
  lo.canonicalize();
  hi.canonicalize();
}

std::pair<Rational, Rational> enclose_sum(const Sum& s, std::uint32_t bits) {
  Rational lo = 0, hi = 0;
  for (const Term& t : s) {
    Rational rl, rh;
    radical_bounds(t.radicand, t.index, bits, rl, rh);
    if (sgn(t.coeff) >= 0) {
      lo += t.coeff * rl;
      hi += t.coeff * rh;
    } else {
      lo += t.coeff * rh;
      hi += t.coeff * rl;
    }
  }
  return {lo, hi};
}

int sign_of(const Sum& s) {
  if (s.empty()) return 0;
  if (s.size() == 1) return sgn(s.front().coeff);
  bool all_rational_sign = true;
  int first = sgn(s.front().coeff);
  for (const Term& t : s) all_rational_sign &= sgn(t.coeff) == first;
  if (all_rational_sign) return first;
  if (s.size() == 2) {
    // c1 r1 + c2 r2 with opposite signs: compare |c1|^L r1^L and |c2|^L r2^L.
    const Term& p = sgn(s[0].coeff) > 0 ? s[0] : s[1];
    const Term& q = sgn(s[0].coeff) > 0 ? s[1] : s[0];
    const std::uint32_t l = std::lcm(p.index, q.index);
    const Rational cq = -q.coeff;
    const mpz_class lhs = ipow(p.coeff.get_num(), l) * ipow(p.radicand, l / p.index) *
                          ipow(cq.get_den(), l);
    const mpz_class rhs = ipow(cq.get_num(), l) * ipow(q.radicand, l / q.index) *
                          ipow(p.coeff.get_den(), l);
    const int c = cmp(lhs, rhs);
    return (c > 0) - (c < 0);
  }
  for (std::uint32_t bits = 32; bits <= (1u << 22); bits *= 2) {
    auto [lo, hi] = enclose_sum(s, bits);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
  throw std::logic_error("sign refinement did not terminate; radical sum invariant broken");
}

std::string term_body(const Term& t, const Rational& abs_coeff) {
  if (t.index == 1) return rational_to_string(abs_coeff);
  std::string rad = t.radicand.get_str() + "^(1/" + std::to_string(t.index) + ")";
  if (abs_coeff == 1) return rad;
  return rational_to_string(abs_coeff) + "*" + rad;
}

std::string sum_to_string(Sum s) {
  if (s.empty()) return "0";
  std::sort(s.begin(), s.end(), [](const Term& a, const Term& b) {
    if (a.index != b.index) return a.index < b.index;
    return a.radicand < b.radicand;
  });
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Term& t = s[i];
    bool neg = sgn(t.coeff) < 0;
    Rational a = abs(t.coeff);
    if (i == 0) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_body(t, a);
  }
  return out;
}

}  // namespace

ExactReal::ExactReal(const Rational& q) {
  if (sgn(q) != 0) num_.push_back(Term{q, 1, 1});
}

ExactReal::ExactReal(const ExtRat& q) {
  if (q.is_infinite()) {
    infinite_ = true;
  } else if (!q.is_zero()) {
    num_.push_back(Term{q.value(), 1, 1});
  }
}

ExactReal ExactReal::infinity() {
  ExactReal r;
  r.infinite_ = true;
  return r;
}

ExactReal ExactReal::root(const Rational& q, std::uint32_t n) {
  if (n == 0) throw DomainError("root index must be positive");
  if (sgn(q) < 0) throw DomainError("root of a negative rational");
  ExactReal r;
  if (sgn(q) != 0) r.num_.push_back(make_term(Rational(1), q, n));
  return r;
}

int ExactReal::sign() const {
  if (infinite_) return 1;
  return sign_of(num_);
}

std::optional<Rational> ExactReal::as_rational() const {
  if (infinite_ || !den_.empty()) return std::nullopt;
  if (num_.empty()) return Rational(0);
  if (num_.size() == 1 && num_.front().index == 1) return num_.front().coeff;
  return std::nullopt;
}

bool ExactReal::is_monomial() const { return !infinite_ && den_.empty() && num_.size() <= 1; }

void ExactReal::normalize() {
  if (infinite_) {
    num_.clear();
    den_.clear();
    return;
  }
  if (num_.empty()) {
    den_.clear();
    return;
  }
  if (den_.size() == 1) {
    Sum inv{invert(den_.front())};
    num_ = mul(num_, inv);
    den_.clear();
  }
}

ExactReal ExactReal::operator-() const {
  if (infinite_) throw DomainError("negative infinity is not representable");
  ExactReal r = *this;
  r.num_ = negate(r.num_);
  return r;
}

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  if (a.infinite_ || b.infinite_) return ExactReal::infinity();
  ExactReal r;
  if (a.den_.empty() && b.den_.empty()) {
    r.num_ = add(a.num_, b.num_);
    return r;
  }
  const Sum unit = one();
  r.num_ = add(mul(a.num_, or_one(b.den_, unit)), mul(b.num_, or_one(a.den_, unit)));
  r.den_ = mul(or_one(a.den_, unit), or_one(b.den_, unit));
  r.normalize();
  return r;
}

ExactReal operator-(const ExactReal& a, const ExactReal& b) {
  if (b.infinite_) throw DomainError("subtracting infinity");
  return a + (-b);
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  if (a.infinite_ || b.infinite_) {
    const ExactReal& other = a.infinite_ ? b : a;
    if (other.is_zero()) throw DomainError("0 * inf is undefined");
    if (other.sign() < 0) throw DomainError("negative infinity is not representable");
    return ExactReal::infinity();
  }
  ExactReal r;
  r.num_ = mul(a.num_, b.num_);
  if (!a.den_.empty() || !b.den_.empty()) {
    const Sum unit = one();
    r.den_ = mul(or_one(a.den_, unit), or_one(b.den_, unit));
  }
  r.normalize();
  return r;
}

ExactReal operator/(const ExactReal& a, const ExactReal& b) {
  if (b.infinite_) {
    if (a.infinite_) throw DomainError("inf / inf is undefined");
    return ExactReal();
  }
  if (b.is_zero()) {
    if (a.is_zero()) throw DomainError("0 / 0 is undefined");
    if (a.sign() < 0) throw DomainError("negative infinity is not representable");
    return ExactReal::infinity();
  }
  if (a.infinite_) {
    if (b.sign() < 0) throw DomainError("negative infinity is not representable");
    return ExactReal::infinity();
  }
  const Sum unit = one();
  ExactReal r;
  r.num_ = mul(a.num_, or_one(b.den_, unit));
  r.den_ = mul(or_one(a.den_, unit), b.num_);
  if (sign_of(r.den_) < 0) {
    r.num_ = negate(r.num_);
    r.den_ = negate(r.den_);
  }
  if (r.den_.size() == 1 && r.den_.front().index == 1 && r.den_.front().coeff == 1) {
    r.den_.clear();
  }
  r.normalize();
  return r;
}

ExactReal ExactReal::pow(const Rational& exponent) const {
  if (sgn(exponent) == 0) return ExactReal(1);
  if (infinite_) return sgn(exponent) > 0 ? infinity() : ExactReal();
  if (is_zero()) return sgn(exponent) > 0 ? ExactReal() : infinity();
  if (!is_monomial()) {
    throw UnsupportedError("exact root of a sum of radicals is not supported: " + to_string());
  }
  if (sign() < 0) throw DomainError("rational power of a negative value");
  Term t = num_.front();
  Rational e = exponent;
  if (sgn(e) < 0) {
    t = invert(t);
    e = -e;
  }
  const mpz_class& p = e.get_num();
  const mpz_class& q = e.get_den();
  if (!p.fits_ulong_p() || !q.fits_ulong_p() || q.get_ui() > (1u << 20)) {
    throw UnsupportedError("exponent too large for exact evaluation");
  }
  unsigned long pe = p.get_ui();
  std::uint32_t qe = static_cast<std::uint32_t>(q.get_ui());
  Rational cp;
  mpz_pow_ui(cp.get_num_mpz_t(), t.coeff.get_num_mpz_t(), pe);
  mpz_pow_ui(cp.get_den_mpz_t(), t.coeff.get_den_mpz_t(), pe);
  Term c_part = make_term(Rational(1), cp, qe);
  Term r_part = canonical_term(Rational(1), ipow(t.radicand, pe), t.index * qe);
  ExactReal r;
  r.num_.push_back(mul_terms(c_part, r_part));
  return r;
}

bool operator==(const ExactReal& a, const ExactReal& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  auto qa = a.as_rational();
  auto qb = b.as_rational();
  if (qa && qb) return cmp(*qa, *qb) <=> 0;
  return (a - b).sign() <=> 0;
}

std::pair<Rational, Rational> ExactReal::enclose(std::uint32_t bits) const {
  if (infinite_) throw DomainError("enclosure of infinity");
  auto n = enclose_sum(num_, bits);
  if (den_.empty()) return n;
  for (std::uint32_t b = bits;; b *= 2) {
    auto d = enclose_sum(den_, b);
    if (sgn(d.first) > 0) {
      Rational c[4] = {n.first / d.first, n.first / d.second, n.second / d.first,
                       n.second / d.second};
      return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
    }
  }
}

double ExactReal::to_double() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  if (auto q = as_rational()) return q->get_d();
  auto [lo, hi] = enclose(96);
  Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string ExactReal::to_string() const {
  if (infinite_) return "inf";
  if (den_.empty()) return sum_to_string(num_);
  return "(" + sum_to_string(num_) + ")/(" + sum_to_string(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const ExactReal& x) { return os << x.to_string(); }

ExactReal min(const ExactReal& a, const ExactReal& b) { return b < a ? b : a; }
ExactReal max(const ExactReal& a, const ExactReal& b) { return a < b ? b : a; }

}  // namespace symcap
