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

#include "symcap/piecewise_linear.hpp"

#include <algorithm>
#include <ostream>

#include "symcap/errors.hpp"

namespace symcap {

namespace {

using Knot = PiecewiseLinearFn::Knot;

std::vector<Rational> merged_breakpoints(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  std::vector<Rational> xs = f.breakpoints();
  std::vector<Rational> gx = g.breakpoints();
  xs.insert(xs.end(), gx.begin(), gx.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Pointwise min (sign = -1) or max (sign = +1) of two functions.
PiecewiseLinearFn combine(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g, int sign) {
  auto pick = [sign](const Rational& u, const Rational& v) {
    return (sign > 0) == (u >= v) ? u : v;
  };
  std::vector<Rational> xs = merged_breakpoints(f, g);
  std::vector<Knot> out;
  Rational px = 0;
  Rational pd = f.value_at_zero() - g.value_at_zero();
  const Rational y0 = pick(f.value_at_zero(), g.value_at_zero());
  for (const Rational& x : xs) {
    const Rational fx = f(x), gx = g(x);
    const Rational d = fx - gx;
    if ((sgn(pd) > 0 && sgn(d) < 0) || (sgn(pd) < 0 && sgn(d) > 0)) {
      Rational cx = px + pd * (x - px) / (pd - d);
      out.push_back({cx, f(cx)});
    }
    out.push_back({x, pick(fx, gx)});
    px = x;
    pd = d;
  }
  return PiecewiseLinearFn(std::move(out), y0);
}

}  // namespace

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Knot> knots, Rational value_at_zero)
    : y0_(std::move(value_at_zero)) {
  if (knots.empty()) throw DomainError("piecewise-linear function needs knots");
  if (knots.back().x != 1) throw DomainError("last knot must sit at 1");
  if (sgn(y0_) < 0) throw DomainError("piecewise-linear function must be nonnegative");
  Rational px = 0, py = y0_;
  for (const Knot& k : knots) {
    if (k.x <= px) throw DomainError("knots must be strictly increasing in (0,1]");
    if (k.y < py) throw DomainError("piecewise-linear function must be nondecreasing");
    px = k.x;
    py = k.y;
  }
  // Drop knots where the slope does not change.
  for (const Knot& k : knots) {
    while (!knots_.empty()) {
      const Knot& b = knots_.back();
      const Rational ax = knots_.size() >= 2 ? knots_[knots_.size() - 2].x : Rational(0);
      const Rational ay = knots_.size() >= 2 ? knots_[knots_.size() - 2].y : y0_;
      if ((b.y - ay) * (k.x - b.x) != (k.y - b.y) * (b.x - ax)) break;
      knots_.pop_back();
    }
    knots_.push_back(k);
  }
}

PiecewiseLinearFn PiecewiseLinearFn::identity() { return PiecewiseLinearFn({{1, 1}}); }

PiecewiseLinearFn PiecewiseLinearFn::constant(const Rational& c) {
  return PiecewiseLinearFn({{1, c}}, c);
}

Rational PiecewiseLinearFn::operator()(const Rational& a) const {
  if (sgn(a) <= 0 || a > 1) throw DomainError("argument outside (0,1]: " + rational_to_string(a));
  auto it = std::lower_bound(knots_.begin(), knots_.end(), a,
                             [](const Knot& k, const Rational& v) { return k.x < v; });
  if (it->x == a) return it->y;
  const Rational x0 = it == knots_.begin() ? Rational(0) : std::prev(it)->x;
  const Rational y0 = it == knots_.begin() ? y0_ : std::prev(it)->y;
  return y0 + (it->y - y0) * (a - x0) / (it->x - x0);
}

Rational PiecewiseLinearFn::left_slope() const { return slope(0); }

std::vector<Rational> PiecewiseLinearFn::breakpoints() const {
  std::vector<Rational> xs;
  xs.reserve(knots_.size());
  for (const Knot& k : knots_) xs.push_back(k.x);
  return xs;
}

Rational PiecewiseLinearFn::slope(std::size_t i) const {
  const Rational x0 = i == 0 ? Rational(0) : knots_[i - 1].x;
  const Rational y0 = i == 0 ? y0_ : knots_[i - 1].y;
  return (knots_[i].y - y0) / (knots_[i].x - x0);
}

std::optional<Rational> PiecewiseLinearFn::ratio_monotonicity_violation() const {
  // On the first segment f(a)/a = s + f(0+)/a, nonincreasing since f(0+) >= 0.
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    const Knot& left = knots_[i - 1];
    if (slope(i) * left.x > left.y) return left.x;
  }
  return std::nullopt;
}

PiecewiseLinearFn PiecewiseLinearFn::scaled(const Rational& c) const {
  if (sgn(c) < 0) throw DomainError("negative scale");
  std::vector<Knot> ks = knots_;
  for (Knot& k : ks) k.y *= c;
  return PiecewiseLinearFn(std::move(ks), y0_ * c);
}

std::string PiecewiseLinearFn::to_string() const {
  std::string s = "PL[0+ -> " + rational_to_string(y0_);
  for (const Knot& k : knots_) {
    s += "; " + rational_to_string(k.x) + " -> " + rational_to_string(k.y);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const PiecewiseLinearFn& f) { return os << f.to_string(); }

ExtRat pl_eval(const PiecewiseLinearFn& f, const ExtRat& a) {
  if (a.is_infinite()) throw DomainError("argument outside (0,1]: inf");
  return ExtRat(f(a.value()));
}

PlComparison pl_compare(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g) {
  PlComparison r{PlOrder::kEqual, std::nullopt, std::nullopt};
  Rational px = 0;
  Rational pd = f.value_at_zero() - g.value_at_zero();
  for (const Rational& x : merged_breakpoints(f, g)) {
    const Rational d = f(x) - g(x);
    // Witness: a breakpoint carrying the sign, or a point close to 0 when
    // only the limit f(0+) - g(0+) does.
    auto witness = [&](int s) -> Rational {
      if (sgn(d) == s) return x;
      if (sgn(px) > 0) return px;
      return x * pd / (2 * (pd - d));
    };
    if ((sgn(d) < 0 || sgn(pd) < 0) && !r.below_witness) r.below_witness = witness(-1);
    if ((sgn(d) > 0 || sgn(pd) > 0) && !r.above_witness) r.above_witness = witness(1);
    px = x;
    pd = d;
  }
  if (r.below_witness && r.above_witness) {
    r.order = PlOrder::kIncomparable;
  } else if (r.below_witness) {
    r.order = PlOrder::kLessEq;
  } else if (r.above_witness) {
    r.order = PlOrder::kGreaterEq;
  }
  return r;
}

PiecewiseLinearFn pl_min(const std::vector<PiecewiseLinearFn>& fs) {
  if (fs.empty()) throw DomainError("pl_min of an empty list");
  PiecewiseLinearFn acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = combine(acc, fs[i], -1);
  return acc;
}

PiecewiseLinearFn pl_max(const std::vector<PiecewiseLinearFn>& fs) {
  if (fs.empty()) throw DomainError("pl_max of an empty list");
  PiecewiseLinearFn acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = combine(acc, fs[i], 1);
  return acc;
}

}  // namespace symcap
