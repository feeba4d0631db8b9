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

#include "../support/generators.hpp"
#include "symcap/capacity_expr.hpp"
#include "symcap/dim4.hpp"
#include "symcap/errors.hpp"
#include "symcap/spectrum.hpp"

using namespace symcap;
using namespace symcap::dim4;
using symcap::testing::qq;

TEST_CASE("normalized EH as a piecewise linear function") {
  const PiecewiseLinearFn c1 = normalized_eh_pl(1);
  CHECK(c1(qq(1, 3)) == qq(1, 3));
  CHECK(c1(1) == 1);
  const PiecewiseLinearFn c2 = normalized_eh_pl(2);
  CHECK(c2(qq(1, 4)) == qq(1, 2));
  CHECK(c2(qq(1, 2)) == 1);
  CHECK(c2(qq(3, 4)) == 1);
  CHECK(normalized_eh_pl(4)(qq(1, 3)) == qq(1, 2));
  CHECK(pl_eval(c2, ExtRat(1, 4)) == ExtRat(1, 2));

  const PiecewiseLinearFn c6 = normalized_eh_pl(6);
  CHECK(plateau_count(6) == 3);
  const Rational starts[] = {qq(1, 6), qq(2, 5), qq(3, 4)};
  const Rational ends[] = {qq(1, 5), qq(1, 2), qq(1, 1)};
  for (int l = 1; l <= 3; ++l) {
    CHECK(plateau_start(6, l) == starts[l - 1]);
    CHECK(plateau_end(6, l) == ends[l - 1]);
    CHECK(c6(starts[l - 1]) == qq(l, 3));
    CHECK(c6(ends[l - 1]) == qq(l, 3));
  }
}

TEST_CASE("PL comparisons among normalized EH capacities") {
  CHECK(pl_compare(normalized_eh_pl(4), normalized_eh_pl(2)).order == PlOrder::kLessEq);
  CHECK(pl_compare(normalized_eh_pl(1), normalized_eh_pl(1)).order == PlOrder::kEqual);
  // c-bar_3 sits below c-bar_2; 3 and 5 genuinely cross.
  CHECK(pl_compare(normalized_eh_pl(3), normalized_eh_pl(2)).order == PlOrder::kLessEq);
  const PiecewiseLinearFn f = normalized_eh_pl(3), g = normalized_eh_pl(5);
  const PlComparison c = pl_compare(f, g);
  REQUIRE(c.order == PlOrder::kIncomparable);
  REQUIRE(c.below_witness.has_value());
  REQUIRE(c.above_witness.has_value());
  CHECK(f(*c.below_witness) < g(*c.below_witness));
  CHECK(f(*c.above_witness) > g(*c.above_witness));
  CHECK(pl_max({normalized_eh_pl(1), normalized_eh_pl(2)}) == normalized_eh_pl(2));
}

TEST_CASE("limit function and sup distances") {
  CHECK(c_infinity_4d(1) == ExtRat(1));
  CHECK(c_infinity_4d(ExtRat(1, 3)) == ExtRat(1, 2));
  CHECK(c_infinity_4d(ExtRat(1, 4)) == ExtRat(2, 5));
  CHECK(sup_distance_to_limit(2) == ExactReal(qq(1, 3)));
  CHECK(sup_distance_to_limit(3) == ExactReal(qq(1, 6)));
  CHECK(sup_distance_to_limit(4) == ExactReal(qq(1, 5)));
  for (std::int64_t k = 2; k <= 50; ++k) {
    const std::int64_t m = (k + 1) / 2;
    const Rational want = k % 2 == 0 ? qq(1, k + 1) : qq(m - 1, m * k);
    CHECK(sup_distance_to_limit(k) == ExactReal(want));
    const Extrema e = difference_extrema(normalized_eh_pl(k));
    if (k % 2 == 0) CHECK(e.min.sign() >= 0);
    else CHECK(e.max.sign() <= 0);
  }
  CHECK(verify_limit_table(50).passed());
}

TEST_CASE("embedding functions for E(1,b)") {
  const PartialFn to = embed_to_fn(ExtRat(5, 2));
  CHECK(to(qq(7, 20)) == qq(2, 5));
  CHECK(to(qq(3, 4)) == qq(3, 4));
  CHECK_FALSE(to.defined_at(qq(1, 5)));
  CHECK_THROWS_AS(to(qq(1, 5)), DomainError);
  const PartialFn to1 = embed_to_fn(1);
  CHECK(to1.validity().lo == qq(1, 2));
  CHECK(to1(qq(3, 5)) == 1);

  const PartialFn from = embed_from_fn(ExtRat(5, 2));
  CHECK(from(qq(1, 10)) == qq(1, 10));
  CHECK(from(qq(41, 100)) == qq(2, 5));
  CHECK_FALSE(from.defined_at(qq(3, 5)));
  CHECK(embed_from_fn(2).defined_at(qq(3, 5)));
  CHECK(embed_from_fn(3).defined_at(qq(1, 2)));
  CHECK_FALSE(embed_from_fn(3).defined_at(qq(3, 5)));
}

TEST_CASE("bounds for the ball embedding function") {
  CHECK(lagrangian_folding_bound(ExtRat(1, 4)) == ExtRat(3, 4));
  CHECK(lagrangian_folding_bound(ExtRat(1, 6)) == ExtRat(1, 2));
  CHECK(lagrangian_folding_bound(ExtRat(1, 2)) == ExtRat(1));
  const Bounds q = cB_bounds(ExtRat(1, 4), 12);
  CHECK(q.lower == ExactReal(qq(1, 2)));
  CHECK(q.upper == ExactReal(qq(3, 4)));
  const Bounds h = cB_bounds(ExtRat(3, 4), 12);
  CHECK(h.lower == ExactReal(1));
  CHECK(h.upper == ExactReal(1));
  const Bounds e = cB_bounds(ExtRat(1, 8), 12);
  CHECK(e.lower == ExactReal::root(qq(1, 8), 2));
  CHECK(e.upper == ExactReal(qq(1, 2)));
  for (long i = 1; i <= 200; ++i) {
    const Bounds b = cB_bounds(ExtRat(i, 200), 12);
    CHECK(b.lower <= b.upper);
    if (2 * i >= 200) CHECK(b.lower == b.upper);
  }
}

TEST_CASE("representing regions") {
  CHECK(build_Xk(2) ==
        Region::disjoint_union({Region::cylinder(4, ExtRat(1, 2)), Region::ball(4, 1)}));
  CHECK(build_Ekj(3, 1) == Region::ellipsoid({ExtRat(2, 3), ExtRat(2)}));
  CHECK(build_Yk(5) == Region::cylinder(4, ExtRat(3, 5)));
}

TEST_CASE("representation verifiers") {
  for (std::int64_t k : {2, 9, 30}) CHECK(verify_representation(k).passed());
  for (std::int64_t k : {3, 12, 25}) CHECK(verify_representation2(k).passed());
  CHECK(verify_polydisc_representation(1).passed());
  CHECK(verify_polydisc_representation(7).passed());
  CHECK(verify_polydisc_representation(10).passed());
}

TEST_CASE("ordering of c-bar_{2ml} against c-bar_{2m}") {
  CHECK(verify_corollary_2ml(1, 2).passed());
  CHECK(verify_corollary_2ml(3, 1).passed());
  CHECK(verify_corollary_2ml(2, 5).passed());
}

TEST_CASE("Lipschitz estimate") {
  CHECK(lipschitz_check(normalized_eh_pl(5)).passed());
  CHECK(lipschitz_check(PiecewiseLinearFn::identity()).passed());
  const PiecewiseLinearFn bad({{qq(1, 2), qq(1, 8)}, {qq(1, 1), qq(7, 8)}});
  const VerificationReport r = lipschitz_check(bad);
  CHECK_FALSE(r.passed());
  CHECK(r.failure_count() >= 1);
}

TEST_CASE("linear bound on polydiscs") {
  using CE = CapacityExpr;
  CHECK(polydisc_linear_bound_check({CE::gromov_radius()}, {qq(1, 4)}).passed());
  CHECK(polydisc_linear_bound_check({CE::normalized_eh(2)}, {qq(1, 1)}).passed());
  CHECK(polydisc_linear_bound_check({CE::normalized_eh(6)}, {qq(1, 1)}).passed());
  CHECK(normalized_eh(Region::polydisc({1, 1}), 6) == ExtRat(2));
  std::vector<Rational> grid;
  for (long i = 1; i <= 40; ++i) grid.push_back(qq(i, 40));
  std::vector<CE> all{CE::gromov_radius(), CE::volume(), CE::limit()};
  for (std::int64_t k = 1; k <= 12; ++k) all.push_back(CE::normalized_eh(k));
  CHECK(polydisc_linear_bound_check(all, grid).passed());
}
