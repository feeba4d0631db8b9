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

#ifndef SYMCAP_DIM4_HPP_
#define SYMCAP_DIM4_HPP_

#include <cstdint>
#include <vector>

#include "symcap/capacity_expr.hpp"
#include "symcap/exact_real.hpp"
#include "symcap/ext_rat.hpp"
#include "symcap/piecewise_linear.hpp"
#include "symcap/region.hpp"
#include "symcap/report.hpp"

// Four-dimensional capacity functions. A capacity c is encoded as the
// function a -> c(E(a,1)) on (0,1].
namespace symcap::dim4 {

// Reference value of the multiple-folding upper bound curve s at a = 1/4.
// Only this one value is known; the curve itself is not modelled.
inline constexpr double kMultipleFoldingAtQuarter = 0.6729;

// c-bar_k(E(a,1)) with m = floor((k+1)/2): plateaus of height i/m on
// [i/(k+1-i), i/(k-i)] joined by pieces of slope (k+1-i)/m.
PiecewiseLinearFn normalized_eh_pl(std::int64_t k);

// m = floor((k+1)/2).
std::int64_t plateau_count(std::int64_t k);
// Left and right plateau ends a_l = l/(k+1-l) and b_l = min(1, l/(k-l)).
Rational plateau_start(std::int64_t k, std::int64_t l);
Rational plateau_end(std::int64_t k, std::int64_t l);

// 2a/(1+a).
ExtRat c_infinity_4d(const ExtRat& a);

struct Extrema {
  ExactReal max;
  ExactReal min;
  ExactReal argmax;
  ExactReal argmin;
};

// Supremum and infimum over (0,1] of h = f - c_inf for a piecewise-linear
// f. On a piece f = s a + t, h is convex with its critical point at
// a = sqrt(2/s) - 1, so the extrema sit at knots or at that point.
Extrema difference_extrema(const PiecewiseLinearFn& f);

// sup over (0,1] of |c-bar_k - c_inf|, k >= 1.
ExactReal sup_distance_to_limit(std::int64_t k);

struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;
  bool contains(const Rational& x) const;
  std::string to_string() const;
};

// A piecewise-linear formula that is only known on a subinterval.
class PartialFn {
 public:
  PartialFn(Interval validity, PiecewiseLinearFn body);
  const Interval& validity() const { return validity_; }
  const PiecewiseLinearFn& body() const { return body_; }
  bool defined_at(const Rational& a) const { return validity_.contains(a); }
  // DomainError outside the validity interval.
  Rational operator()(const Rational& a) const;

 private:
  Interval validity_;
  PiecewiseLinearFn body_;
};

// c^{E(1,b)}(a) = inf{alpha : E(a,1) -> alpha E(1,b)}: 1/b on
// [1/(N+1), 1/b] and a on [1/b, 1], N = floor(b).
PartialFn embed_to_fn(const ExtRat& b);

// c_{E(1,b)}(a) = sup{alpha : alpha E(1,b) -> E(a,1)}: a on (0, 1/b] and
// 1/b on [1/b, 1/N]. For integer b the choice N = b - 1 is taken, which
// covers all of (0,1] when b <= 2.
PartialFn embed_from_fn(const ExtRat& b);

// Upper bound for c^B(a) from Lagrangian folding.
ExtRat lagrangian_folding_bound(const ExtRat& a);

struct Bounds {
  ExactReal lower;
  ExactReal upper;
};

// Known bounds for c^B(a) = c^{B^4}(E(a,1)): lower from sqrt(a), c-bar_k for
// k <= max_k, and c^B = 1 on [1/2,1]; upper from 1, the folding bound and a
// single fold a + 1/2.
Bounds cB_bounds(const ExtRat& a, std::int64_t max_k);

Region build_Xk(std::int64_t k);
Region build_Ekj(std::int64_t k, std::int64_t j);
Region build_Yk(std::int64_t k);

VerificationReport verify_representation(std::int64_t k);
VerificationReport verify_representation2(std::int64_t k);
VerificationReport verify_polydisc_representation(std::int64_t k, std::int64_t grid = 100);
VerificationReport verify_corollary_2ml(std::int64_t r, std::int64_t s);
VerificationReport lipschitz_check(const PiecewiseLinearFn& f);
// eval(e, P(a,1)) <= 1/2 + a/2 + sqrt(a) at every grid point.
VerificationReport polydisc_linear_bound_check(const std::vector<CapacityExpr>& exprs,
                                               const std::vector<Rational>& grid);

// sup-norm closed forms and sign pattern of c-bar_k - c_inf for 2 <= k <= max_k.
VerificationReport verify_limit_table(std::int64_t max_k);

}  // namespace symcap::dim4

#endif  // SYMCAP_DIM4_HPP_
