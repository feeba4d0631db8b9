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

#ifndef SYMCAP_PIECEWISE_LINEAR_HPP_
#define SYMCAP_PIECEWISE_LINEAR_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcap/ext_rat.hpp"

namespace symcap {

// Continuous, nondecreasing, piecewise-linear function on (0, 1] with exact
// rational breakpoints.
//
// The domain is open at 0, so the initial segment is stored through its
// limit value f(0+) (zero for every capacity function c(a) = c(E(a,1)))
// and its slope. Knots are (x_i, f(x_i)) with 0 < x_1 < ... < x_m = 1;
// collinear interior knots are dropped on construction, so two functions
// are equal iff their knot lists are.
class PiecewiseLinearFn {
 public:
  struct Knot {
    Rational x;
    Rational y;
    friend bool operator==(const Knot&, const Knot&) = default;
  };

  // Throws DomainError unless the knots are strictly increasing in x, end
  // at x = 1, and the function is nonnegative and nondecreasing.
  PiecewiseLinearFn(std::vector<Knot> knots, Rational value_at_zero = 0);

  static PiecewiseLinearFn identity();
  static PiecewiseLinearFn constant(const Rational& c);

  Rational operator()(const Rational& a) const;

  const std::vector<Knot>& knots() const { return knots_; }
  const Rational& value_at_zero() const { return y0_; }
  Rational left_slope() const;
  // Breakpoint x-coordinates, ending with 1.
  std::vector<Rational> breakpoints() const;
  // Slope on the segment ending at knots()[i].
  Rational slope(std::size_t i) const;

  // f(a)/a nonincreasing on (0,1]: every slope is at most f(x)/x at the
  // left end of its segment. Returns the first violating left endpoint.
  std::optional<Rational> ratio_monotonicity_violation() const;

  PiecewiseLinearFn scaled(const Rational& c) const;

  friend bool operator==(const PiecewiseLinearFn&, const PiecewiseLinearFn&) = default;
  std::string to_string() const;

 private:
  Rational y0_;
  std::vector<Knot> knots_;
};

std::ostream& operator<<(std::ostream& os, const PiecewiseLinearFn& f);

// Exact value f(a); DomainError unless 0 < a <= 1.
ExtRat pl_eval(const PiecewiseLinearFn& f, const ExtRat& a);

enum class PlOrder { kEqual, kLessEq, kGreaterEq, kIncomparable };

struct PlComparison {
  PlOrder order;
  // A point with f(x) < g(x) and one with f(x) > g(x), when they exist.
  std::optional<Rational> below_witness;
  std::optional<Rational> above_witness;
};

// Decided exactly: f - g is linear between consecutive points of the
// merged breakpoint set, so its sign pattern is fixed by those points and
// the limit at 0.
PlComparison pl_compare(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g);

PiecewiseLinearFn pl_min(const std::vector<PiecewiseLinearFn>& fs);
PiecewiseLinearFn pl_max(const std::vector<PiecewiseLinearFn>& fs);

}  // namespace symcap

#endif  // SYMCAP_PIECEWISE_LINEAR_HPP_
