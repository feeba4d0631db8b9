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

#include <doctest.h>

#include <random>

#include "symcap/alg_value.hpp"
#include "symcap/errors.hpp"
#include "symcap/exact_real.hpp"
#include "symcap/ext_rat.hpp"
#include "symcap/piecewise_linear.hpp"
#include "symcap/region.hpp"

using namespace symcap;

TEST_CASE("ExtRat normalizes and orders") {
  CHECK(ExtRat(2, 4) == ExtRat(1, 2));
  CHECK(ExtRat(6, 3).to_string() == "2");
  CHECK(ExtRat::parse("3/9") == ExtRat(1, 3));
  CHECK(ExtRat::parse("inf").is_infinite());
  CHECK(ExtRat(1000000) < ExtRat::infinity());
  CHECK(ExtRat::infinity() == ExtRat::infinity());
  CHECK(ExtRat(0).reciprocal().is_infinite());
  CHECK(ExtRat::infinity().reciprocal().is_zero());
  CHECK(ExtRat(1, 3) + ExtRat(1, 6) == ExtRat(1, 2));
  CHECK(ExtRat(3, 4) - ExtRat(1, 4) == ExtRat(1, 2));
  CHECK_THROWS_AS(ExtRat(1, 4) - ExtRat(3, 4), DomainError);
  CHECK_THROWS_AS(ExtRat(0) * ExtRat::infinity(), DomainError);
  CHECK_THROWS_AS(ExtRat::parse("1/0x"), ParseError);
  CHECK_THROWS(ExtRat(-1, 2));
}

TEST_CASE("ExtRat round-trip property") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const int p = d(rng) - 1, q = d(rng), k = d(rng);
    const ExtRat a(p, q);
    CHECK(a == ExtRat(std::int64_t(k) * p, std::int64_t(k) * q));
    CHECK(ExtRat::parse(a.to_string()) == a);
  }
}

TEST_CASE("ball_eh_index") {
  CHECK(ball_eh_index(3, 2) == 2);
  CHECK(ball_eh_index(6, 2) == 3);
  CHECK(ball_eh_index(7, 1) == 7);
  CHECK(ball_eh_index(1, 4) == 1);
}

TEST_CASE("AlgValue normalization and comparison") {
  CHECK(AlgValue(ExtRat(4), 2) == AlgValue(2));
  CHECK(AlgValue(ExtRat(4), 2).is_rational());
  CHECK(AlgValue(ExtRat(8), 6) == AlgValue(ExtRat(2), 2));
  CHECK(AlgValue(ExtRat(2), 2).to_string() == "2^(1/2)");
  CHECK(AlgValue(ExtRat(1, 2), 2).to_string() == "(1/2)^(1/2)");
  CHECK(AlgValue(ExtRat(10), 2) > AlgValue(3));
  CHECK(AlgValue(ExtRat(2), 2) < AlgValue(ExtRat(3), 3));
  CHECK(AlgValue(ExtRat(9), 2) == AlgValue(3));
  CHECK(AlgValue::parse("(1/8)^(1/3)") == AlgValue(ExtRat(1, 2)));
  CHECK(AlgValue::parse("inf").is_infinite());
  CHECK(AlgValue(ExtRat(2), 2) * AlgValue(ExtRat(2), 2) == AlgValue(2));
  CHECK(AlgValue(ExtRat(1, 4)).pow(Rational(1, 2)) == AlgValue(ExtRat(1, 2)));
}

TEST_CASE("AlgValue order is total and agrees with cross-powering") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(1, 60), idx(1, 5);
  auto draw = [&] { return AlgValue(ExtRat(num(rng), num(rng)), idx(rng)); };
  for (int i = 0; i < 1000; ++i) {
    const AlgValue a = draw(), b = draw(), c = draw();
    const int lt = a < b, eq = a == b, gt = a > b;
    CHECK(lt + eq + gt == 1);
    if (a <= b && b <= c) CHECK(a <= c);
    // Oracle: big-integer cross-powering on the raw pairs.
    mpz_class l = a.radicand().numerator(), r = b.radicand().numerator();
    mpz_class ld = a.radicand().denominator(), rd = b.radicand().denominator();
    mpz_class lhs, rhs, t;
    mpz_pow_ui(lhs.get_mpz_t(), l.get_mpz_t(), b.root_index());
    mpz_pow_ui(t.get_mpz_t(), rd.get_mpz_t(), a.root_index());
    lhs *= t;
    mpz_pow_ui(rhs.get_mpz_t(), r.get_mpz_t(), a.root_index());
    mpz_pow_ui(t.get_mpz_t(), ld.get_mpz_t(), b.root_index());
    rhs *= t;
    CHECK((lhs < rhs) == (a < b));
    CHECK((lhs == rhs) == (a == b));
  }
}

TEST_CASE("ExactReal radical arithmetic") {
  const ExactReal s2 = ExactReal::root(2, 2);
  CHECK(s2 * s2 == ExactReal(2));
  CHECK((s2 + 1) * (s2 - 1) == ExactReal(1));
  CHECK(ExactReal::root(8, 2) == 2 * s2);
  CHECK(ExactReal::root(Rational(1, 2), 2) == s2 / 2);
  CHECK((ExactReal::root(3, 2) - s2).sign() == 1);
  CHECK((ExactReal(3) / 2 - s2).sign() == 1);   // 1.5 > 1.414
  CHECK((ExactReal(7) / 5 - s2).sign() == -1);  // 1.4 < 1.414
  CHECK(ExactReal(1) / (s2 + 1) == s2 - 1);
  CHECK((ExactReal::root(2, 3).pow(3)) == ExactReal(2));
  CHECK_THROWS_AS((s2 + 1).pow(Rational(1, 2)), UnsupportedError);
  CHECK(ExactReal::infinity() > ExactReal(1000000));
  CHECK((ExactReal(1) / ExactReal(0)).is_infinite());
  // A sum that is zero only through like-term merging.
  CHECK((ExactReal::root(12, 2) - 2 * ExactReal::root(3, 2)).is_zero());
}

TEST_CASE("ExactReal sign of near-cancelling sums") {
  // sqrt(2) + sqrt(3) vs sqrt(10): 5 + 2 sqrt6 = 9.899 < 10.
  const ExactReal d = ExactReal::root(2, 2) + ExactReal::root(3, 2) - ExactReal::root(10, 2);
  CHECK(d.sign() == -1);
  // 99/70 approximates sqrt(2) to 7e-5.
  CHECK((ExactReal(Rational(99, 70)) - ExactReal::root(2, 2)).sign() == 1);
}

TEST_CASE("Region construction") {
  const Region e = Region::ellipsoid({4, 1});
  CHECK(e.as_ellipsoid()->axes == std::vector<ExtRat>{1, 4});
  CHECK(e.to_string() == "E(1,4)");
  CHECK(Region::ball(4, 2) == Region::ellipsoid({2, 2}));
  CHECK(Region::cylinder(6, 1).to_string() == "E(1,inf,inf)");
  CHECK_FALSE(Region::cylinder(4, 1).is_bounded());
  CHECK_THROWS_AS(Region::ellipsoid({ExtRat::infinity()}), DomainError);
  CHECK_THROWS_AS(Region::ellipsoid({0, 1}), DomainError);
  const Region p = Region::product({Region::ball(4, 4), Region::ellipsoid({3, 8})});
  CHECK(p.half_dimension() == 4);
  CHECK(p.to_string() == "E(4,4)xE(3,8)");
  const Region nested = Region::product({p, Region::polydisc({1})});
  CHECK(nested.as_product()->factors.size() == 3);
  CHECK_THROWS_AS(Region::disjoint_union({Region::ball(4, 1), Region::ball(2, 1)}), DomainError);
  const Region u = Region::disjoint_union({Region::cylinder(4, ExtRat(1, 2)), Region::ball(4, 1)});
  CHECK(u.to_string() == "E(1/2,inf)+E(1,1)");
  CHECK(e.scaled(ExtRat(1, 2)) == Region::ellipsoid({ExtRat(1, 2), 2}));
}

TEST_CASE("PiecewiseLinearFn basics") {
  using K = PiecewiseLinearFn::Knot;
  const PiecewiseLinearFn id = PiecewiseLinearFn::identity();
  CHECK(pl_eval(id, 1) == ExtRat(1));
  CHECK_THROWS_AS(pl_eval(id, 0), DomainError);
  CHECK_THROWS_AS(pl_eval(id, ExtRat(3, 2)), DomainError);
  // Collinear knots collapse.
  CHECK(PiecewiseLinearFn({K{Rational(1, 2), Rational(1, 2)}, K{1, 1}}) == id);
  CHECK_THROWS_AS(PiecewiseLinearFn({K{Rational(1, 2), 1}, K{1, Rational(1, 2)}}), DomainError);
  CHECK_THROWS_AS(PiecewiseLinearFn({K{Rational(1, 2), 1}}), DomainError);
  const PiecewiseLinearFn two({K{Rational(1, 2), 1}, K{1, 1}});
  CHECK(two(Rational(1, 4)) == Rational(1, 2));
  CHECK(two.left_slope() == 2);
  CHECK(pl_compare(id, two).order == PlOrder::kLessEq);
  CHECK(pl_compare(two, id).order == PlOrder::kGreaterEq);
  CHECK(pl_compare(id, id).order == PlOrder::kEqual);
  CHECK(pl_max({id, two}) == two);
  CHECK(pl_min({id, two}) == id);
  const PiecewiseLinearFn half = PiecewiseLinearFn::constant(Rational(1, 2));
  const PlComparison c = pl_compare(id, half);
  CHECK(c.order == PlOrder::kIncomparable);
  REQUIRE(c.below_witness);
  REQUIRE(c.above_witness);
  CHECK(id(*c.below_witness) < half(*c.below_witness));
  CHECK(id(*c.above_witness) > half(*c.above_witness));
  const PiecewiseLinearFn m = pl_min({id, half});
  CHECK(m.knots() == std::vector<K>{{Rational(1, 2), Rational(1, 2)}, {1, Rational(1, 2)}});
}

TEST_CASE("ratio monotonicity detection") {
  using K = PiecewiseLinearFn::Knot;
  const PiecewiseLinearFn bad({K{Rational(1, 2), Rational(1, 10)}, K{1, 1}});
  REQUIRE(bad.ratio_monotonicity_violation());
  CHECK(*bad.ratio_monotonicity_violation() == Rational(1, 2));
  CHECK_FALSE(PiecewiseLinearFn::identity().ratio_monotonicity_violation());
  CHECK_FALSE(PiecewiseLinearFn::constant(1).ratio_monotonicity_violation());
}

namespace {

Rational qq(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

PiecewiseLinearFn random_pl(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cnt(1, 6), num(0, 12);
  const int n = cnt(rng);
  std::vector<Rational> xs;
  for (int i = 0; i < n; ++i) xs.push_back(qq(num(rng) + 1, 13));
  xs.push_back(1);
  std::sort(xs.begin(), xs.end(), [](const Rational& a, const Rational& b) { return a < b; });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Rational y = qq(num(rng), 7);
  const Rational y0 = y;
  std::vector<PiecewiseLinearFn::Knot> ks;
  for (const Rational& x : xs) {
    y += qq(num(rng), 5);
    ks.push_back({x, y});
  }
  return PiecewiseLinearFn(std::move(ks), y0);
}

}  // namespace

TEST_CASE("pl_min and pl_max agree with a 1000-point grid") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::vector<PiecewiseLinearFn> fs;
    const int n = 1 + t % 3;
    for (int i = 0; i <= n; ++i) fs.push_back(random_pl(rng));
    const PiecewiseLinearFn lo = pl_min(fs), hi = pl_max(fs);
    for (int i = 1; i <= 1000; ++i) {
      const Rational a = qq(i, 1000);
      Rational mn = fs[0](a), mx = mn;
      for (const auto& f : fs) {
        mn = std::min<Rational>(mn, f(a));
        mx = std::max<Rational>(mx, f(a));
      }
      CHECK(lo(a) == mn);
      CHECK(hi(a) == mx);
    }
  }
}

TEST_CASE("pl_compare agrees with dense sampling") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const PiecewiseLinearFn f = random_pl(rng), g = random_pl(rng);
    const PlComparison c = pl_compare(f, g);
    bool below = false, above = false;
    for (int i = 1; i <= 13 * 40; ++i) {
      const Rational a = qq(i, 13 * 40);
      below |= f(a) < g(a);
      above |= f(a) > g(a);
    }
    // Crossings near 0 may hide below the grid resolution; witnesses are
    // checked directly.
    if (c.below_witness) CHECK(f(*c.below_witness) < g(*c.below_witness));
    if (c.above_witness) CHECK(f(*c.above_witness) > g(*c.above_witness));
    if (below) CHECK(c.below_witness);
    if (above) CHECK(c.above_witness);
  }
}

namespace {

ExactReal random_radical_sum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 3), num(1, 9), rad(1, 12), idx(1, 3);
  ExactReal x(0);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Rational c(num(rng), num(rng));
    c.canonicalize();
    x += ExactReal(c) * ExactReal::root(rad(rng), static_cast<std::uint32_t>(idx(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("ExactReal field identities on random radical sums") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 150; ++t) {
    const ExactReal a = random_radical_sum(rng), b = random_radical_sum(rng),
                    c = random_radical_sum(rng);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK((a * b) / b == a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b > a);
    const auto [alo, ahi] = a.enclose(64);
    const auto [blo, bhi] = b.enclose(64);
    if (ahi < blo) CHECK(a < b);
    if (bhi < alo) CHECK(b < a);
    CHECK(alo <= ahi);
  }
}
