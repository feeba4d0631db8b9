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

#include "../support/generators.hpp"
#include "symcap/capacity_expr.hpp"
#include "symcap/errors.hpp"

using namespace symcap;
using symcap::testing::qq;

namespace {

using CE = CapacityExpr;

Region ell(Rational a, Rational b) { return Region::ellipsoid({ExtRat(a), ExtRat(b)}); }

std::vector<CapacityExpr> neh_basis(std::int64_t kmax) {
  std::vector<CapacityExpr> basis{CE::volume()};
  for (std::int64_t k = 1; k <= kmax; ++k) basis.push_back(CE::normalized_eh(k));
  return basis;
}

}  // namespace

TEST_CASE("eval_expr oracle values") {
  const Region e14 = Region::ellipsoid({1, 4});
  CHECK(eval_expr(CE::max({CE::gromov_radius(), CE::volume()}), e14).value == ExactReal(2));
  const CapacityExpr c = CE::normalized_eh(3);
  CHECK(eval_expr(CE::min({c, c}), e14).value == eval_expr(c, e14).value);
  const CapacityExpr am =
      CE::arithmetic_mean({qq(1, 2), qq(1, 2)}, {CE::gromov_radius(), CE::normalized_eh(2)});
  CHECK(eval_expr(am, ell(qq(1, 4), 1)).value == ExactReal(qq(3, 8)));
  const CapacityExpr gm = CE::geometric_mean({qq(1, 2), qq(1, 2)}, {CE::gromov_radius(), CE::volume()});
  CHECK(eval_expr(gm, Region::polydisc({1, 1})).value == ExactReal::root(2, 4));
  const CapacityExpr hm = CE::harmonic_mean({qq(1, 2), qq(1, 2)}, {CE::eh(1), CE::eh(2)});
  CHECK(eval_expr(hm, Region::ball(4, 1)).value == ExactReal(1));
  CHECK(eval_expr(CE::scale(3, CE::gromov_radius()), Region::ball(4, 2)).value == ExactReal(6));
  CHECK(eval_expr(CE::lagrangian(), Region::ball(4, 1)).conjectural);
  CHECK_FALSE(eval_expr(CE::volume(), Region::ball(4, 1)).conjectural);
}

TEST_CASE("combinator constructors enforce their invariants") {
  CHECK_THROWS_AS(CE::arithmetic_mean({qq(-1, 2), qq(3, 2)}, {CE::eh(1), CE::eh(2)}), DomainError);
  CHECK_THROWS_AS(CE::arithmetic_mean({qq(1, 2), qq(1, 3)}, {CE::eh(1), CE::eh(2)}), DomainError);
  CHECK_THROWS_AS(CE::geometric_mean({qq(1, 1)}, {}), DomainError);
  CHECK_THROWS_AS(CE::scale(0, CE::eh(1)), DomainError);
  CHECK_THROWS_AS(CE::min({}), DomainError);
  CHECK_THROWS_AS(CE::eh(0), DomainError);
}

TEST_CASE("axioms hold for base capacities") {
  std::mt19937_64 rng(17);
  std::vector<OrderedPair> pairs;
  for (int i = 0; i < 100; ++i) pairs.push_back(symcap::testing::random_ordered_pair(rng, 2));
  const std::vector<ExtRat> scalars{ExtRat(1, 2), ExtRat(3)};
  CHECK(check_axioms(CE::gromov_radius(), pairs, scalars).passed());
  CHECK(check_axioms(CE::normalized_eh(7), pairs, scalars).passed());
  CHECK(check_axioms(CE::volume(), pairs, scalars).passed());
  CHECK(check_axioms(CE::limit(), pairs, scalars).passed());
}

TEST_CASE("axioms hold for random combinator trees") {
  std::mt19937_64 rng(23);
  std::vector<OrderedPair> pairs;
  for (int i = 0; i < 40; ++i) pairs.push_back(symcap::testing::random_ordered_pair(rng, 1 + i % 3));
  const std::vector<ExtRat> scalars{ExtRat(1, 3), ExtRat(2), ExtRat(7, 5)};
  for (int t = 0; t < 25; ++t) {
    const CapacityExpr e = symcap::testing::random_expr(rng, 3);
    const VerificationReport r = check_axioms(e, pairs, scalars);
    INFO(e.to_string());
    CHECK(r.passed());
  }
}

TEST_CASE("embedding lower bounds") {
  CHECK(embedding_lower_bound(Region::ball(4, 1), ell(qq(1, 4), 1), neh_basis(10)) ==
        ExactReal(qq(1, 2)));
  for (long i = 1; i <= 8; ++i) {
    const Rational a = qq(i, 8);
    CHECK(embedding_lower_bound(Region::cylinder(4, 1), ell(a, 1), {CE::gromov_radius()}) ==
          ExactReal(a));
  }
  CHECK(embedding_lower_bound(Region::ball(4, 1), Region::ball(4, 1), neh_basis(5)) == ExactReal(1));
  CHECK_THROWS_AS(embedding_lower_bound(Region::ball(4, 1), ell(qq(1, 2), 1), {CE::lagrangian()}),
                  ConjecturalTaintError);
}

TEST_CASE("nested ellipsoids need no shrinking") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 50; ++t) {
    const OrderedPair p = symcap::testing::random_ordered_pair(rng, 2);
    if (!p.smaller.is_bounded()) continue;
    const ExactReal lo = embedding_lower_bound(p.larger, p.smaller, neh_basis(6));
    CHECK(lo <= ExactReal(1));
  }
}

TEST_CASE("packing and skinny volume bounds") {
  const Region b4 = Region::ball(4, 1);
  CHECK(packing_volume_bound(b4, 1, b4) == AlgValue(1));
  CHECK(packing_volume_bound(b4, 2, b4) == AlgValue(ExtRat(1, 2), 2));
  CHECK(packing_volume_bound(Region::ellipsoid({1, 2}), 4, Region::polydisc({1, 1})) ==
        AlgValue(ExtRat(1, 2)));
  CHECK(skinny_volume_bound(b4, 1) == AlgValue(1));
  CHECK(skinny_volume_bound(b4, ExtRat(1, 4)) == AlgValue(ExtRat(1, 2)));
  CHECK(skinny_volume_bound(Region::ellipsoid({1, 2}), ExtRat(1, 2)) == AlgValue(ExtRat(1, 2)));
}

TEST_CASE("reports serialize to the documented keys") {
  VerificationReport r("demo", {{"k", 3}});
  r.record("a", true);
  r.record("b", false, {{"x", "1/2"}});
  const auto j = r.to_json();
  CHECK(j["checker"] == "demo");
  CHECK(j["params"]["k"] == 3);
  CHECK(j["cases"].size() == 2);
  CHECK(j["failures"].size() == 1);
  CHECK(j["verdict"] == "fail");
}
