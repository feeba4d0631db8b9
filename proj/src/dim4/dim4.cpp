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

#include "symcap/dim4.hpp"

#include <string>

#include "symcap/classic.hpp"
#include "symcap/errors.hpp"
#include "symcap/spectrum.hpp"

namespace symcap::dim4 {

namespace {

using Knot = PiecewiseLinearFn::Knot;

Rational frac(std::int64_t p, std::int64_t q) {
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

std::string str(const Rational& q) { return rational_to_string(q); }

void check_unit_interval(const Rational& a) {
  if (sgn(a) <= 0 || a > 1) throw DomainError("a must lie in (0,1], got " + str(a));
}

const Rational& finite_at_least_one(const ExtRat& b) {
  if (b.is_infinite() || b < ExtRat(1)) throw DomainError("b must be finite and >= 1");
  return b.value();
}

Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Region ellipsoid_a1(const Rational& a) { return Region::ellipsoid({ExtRat(a), 1}); }

// c^{E(alpha, alpha b)} = c^{E(1,b)} / alpha, and likewise for c_{...}.
struct ScaledEllipsoid {
  Rational alpha;
  Rational b;
};

ScaledEllipsoid as_scaled(const Rational& a1, const Rational& a2) { return {a1, a2 / a1}; }

}  // namespace

std::int64_t plateau_count(std::int64_t k) { return (k + 1) / 2; }

Rational plateau_start(std::int64_t k, std::int64_t l) { return frac(l, k + 1 - l); }

Rational plateau_end(std::int64_t k, std::int64_t l) {
  if (k - l <= l) return 1;
  return frac(l, k - l);
}

PiecewiseLinearFn normalized_eh_pl(std::int64_t k) {
  if (k < 1) throw DomainError("k must be positive");
  const std::int64_t m = plateau_count(k);
  std::vector<Knot> ks;
  for (std::int64_t i = 1; i <= m; ++i) {
    const Rational h = frac(i, m);
    const Rational a = plateau_start(k, i), b = plateau_end(k, i);
    ks.push_back({a, h});
    if (b != a) ks.push_back({b, h});
  }
  return PiecewiseLinearFn(std::move(ks));
}

ExtRat c_infinity_4d(const ExtRat& a) {
  if (a.is_infinite()) throw DomainError("a must lie in (0,1]");
  check_unit_interval(a.value());
  return ExtRat(2) * a / (ExtRat(1) + a);
}

Extrema difference_extrema(const PiecewiseLinearFn& f) {
  auto h = [](const Rational& x, const Rational& fx) -> Rational {
    return fx - 2 * x / (1 + x);
  };
  // Limit at 0.
  Extrema e{ExactReal(f.value_at_zero()), ExactReal(f.value_at_zero()), ExactReal(0), ExactReal(0)};
  auto consider = [&e](const ExactReal& v, const ExactReal& at) {
    if (v > e.max) {
      e.max = v;
      e.argmax = at;
    }
    if (v < e.min) {
      e.min = v;
      e.argmin = at;
    }
  };
  Rational x0 = 0, y0 = f.value_at_zero();
  for (const Knot& kn : f.knots()) {
    consider(ExactReal(h(kn.x, kn.y)), ExactReal(kn.x));
    const Rational s = (kn.y - y0) / (kn.x - x0);
    if (sgn(s) > 0) {
      const Rational r = 2 / s;  // (1 + a*)^2
      if ((x0 + 1) * (x0 + 1) < r && r < (kn.x + 1) * (kn.x + 1)) {
        const Rational t = y0 - s * x0;
        const ExactReal root = ExactReal::root(2 * s, 2);
        const ExactReal v = ExactReal(2) * root - ExactReal(s) + ExactReal(t) - ExactReal(2);
        consider(v, ExactReal::root(r, 2) - ExactReal(1));
      }
    }
    x0 = kn.x;
    y0 = kn.y;
  }
  return e;
}

ExactReal sup_distance_to_limit(std::int64_t k) {
  const Extrema e = difference_extrema(normalized_eh_pl(k));
  return symcap::max(e.max, -e.min);
}

bool Interval::contains(const Rational& x) const {
  if (x < lo || (x == lo && !lo_closed)) return false;
  if (x > hi || (x == hi && !hi_closed)) return false;
  return true;
}

std::string Interval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + str(lo) + "," + str(hi) + (hi_closed ? "]" : ")");
}

PartialFn::PartialFn(Interval validity, PiecewiseLinearFn body)
    : validity_(std::move(validity)), body_(std::move(body)) {
  if (sgn(validity_.lo) < 0 || validity_.hi > 1 || validity_.hi < validity_.lo) {
    throw DomainError("validity interval must lie in (0,1]");
  }
}

Rational PartialFn::operator()(const Rational& a) const {
  if (!validity_.contains(a)) {
    throw DomainError("out of validity: " + str(a) + " not in " + validity_.to_string());
  }
  return body_(a);
}

PartialFn embed_to_fn(const ExtRat& bb) {
  const Rational& b = finite_at_least_one(bb);
  const Rational n = floor_of(b);
  const Rational inv = 1 / b;
  std::vector<Knot> ks;
  if (inv != 1) ks.push_back({inv, inv});
  ks.push_back({1, 1});
  Interval v{1 / (n + 1), 1, true, true};
  return PartialFn(v, PiecewiseLinearFn(std::move(ks), inv));
}

PartialFn embed_from_fn(const ExtRat& bb) {
  const Rational& b = finite_at_least_one(bb);
  Rational n = floor_of(b);
  if (n == b) n -= 1;
  const Rational inv = 1 / b;
  std::vector<Knot> ks;
  ks.push_back({inv, inv});
  if (inv != 1) ks.push_back({1, inv});
  Interval v{0, sgn(n) == 0 ? Rational(1) : Rational(1 / n), false, true};
  if (v.hi > 1) v.hi = 1;
  return PartialFn(v, PiecewiseLinearFn(std::move(ks)));
}

ExtRat lagrangian_folding_bound(const ExtRat& aa) {
  if (aa.is_infinite()) throw DomainError("a must lie in (0,1]");
  const Rational& a = aa.value();
  check_unit_interval(a);
  for (std::int64_t k = 1;; ++k) {
    if (a >= frac(1, k * (k + 1))) return ExtRat(Rational((k + 1) * a));
    if (a >= frac(1, k * (k + 2))) return ExtRat(frac(1, k));
  }
}

Bounds cB_bounds(const ExtRat& aa, std::int64_t max_k) {
  if (aa.is_infinite()) throw DomainError("a must lie in (0,1]");
  const Rational& a = aa.value();
  check_unit_interval(a);
  if (a >= frac(1, 2)) return {ExactReal(1), ExactReal(1)};
  ExactReal lower = ExactReal::root(a, 2);
  for (std::int64_t k = 1; k <= max_k; ++k) {
    lower = symcap::max(lower, ExactReal(normalized_eh_pl(k)(a)));
  }
  Rational upper = 1;
  const Rational l = lagrangian_folding_bound(aa).value();
  if (l < upper) upper = l;
  if (a + frac(1, 2) < upper) upper = a + frac(1, 2);
  return {lower, ExactReal(upper)};
}

Region build_Xk(std::int64_t k) {
  if (k < 1) throw DomainError("k must be positive");
  const std::int64_t m = plateau_count(k);
  std::vector<Region> parts{build_Yk(k)};
  for (std::int64_t j = 1; j <= k / 2; ++j) {
    parts.push_back(Region::ellipsoid({ExtRat(frac(m, k - j)), ExtRat(frac(m, j))}));
  }
  return Region::disjoint_union(std::move(parts));
}

Region build_Ekj(std::int64_t k, std::int64_t j) {
  const std::int64_t m = plateau_count(k);
  if (k < 1 || j < 1 || j > m) throw DomainError("need 1 <= j <= floor((k+1)/2)");
  return Region::ellipsoid({ExtRat(frac(m, k + 1 - j)), ExtRat(frac(m, j))});
}

Region build_Yk(std::int64_t k) {
  if (k < 1) throw DomainError("k must be positive");
  return Region::cylinder(4, ExtRat(frac(plateau_count(k), k)));
}

VerificationReport verify_representation(std::int64_t k) {
  if (k < 2) throw DomainError("verify_representation needs k >= 2");
  const std::int64_t m = plateau_count(k);
  VerificationReport rep("xk", {{"k", k}});
  rep.note("proof obligations verified, not the embedding capacities themselves");
  const PiecewiseLinearFn cbar = normalized_eh_pl(k);
  const std::vector<CapacityExpr> basis{CapacityExpr::volume(), CapacityExpr::normalized_eh(2)};

  for (std::int64_t j = 1; j <= k / 2; ++j) {
    const Rational alpha = frac(m, k - j);
    const Rational b = frac(k - j, j);
    const Region ej = Region::ellipsoid({ExtRat(alpha), ExtRat(frac(m, j))});
    const PartialFn to = embed_to_fn(ExtRat(b));
    for (std::int64_t l = 1; l <= m; ++l) {
      const Rational al = plateau_start(k, l);
      const Rational target = frac(l, m);
      const std::string label = "j=" + std::to_string(j) + ",l=" + std::to_string(l);
      nlohmann::json w{{"j", j}, {"l", l}, {"a_l", str(al)}, {"cbar_k", str(target)}};
      if (cbar(al) != target) {
        w["reason"] = "c-bar_k(a_l) differs from l/m";
        rep.record(label, false, w);
        continue;
      }
      if (l < j) {
        // Lower bound for c^{E_j}(a_l) from volume and c-bar_2.
        const ExactReal lb = embedding_lower_bound(ej, ellipsoid_a1(al), basis);
        const bool vol_cond = j * (k - j) >= l * (k + 1 - l);
        const bool c2_cond = 2 * al <= 1 && l >= k + 1 - 2 * j;
        const bool ok = lb >= ExactReal(target);
        if (!ok) {
          w["lower_bound"] = lb.to_string();
          w["volume_condition"] = vol_cond;
          w["c2_condition"] = c2_cond;
        }
        rep.record(label + ",bound", ok, w);
      } else {
        // Exact value from the embedding function, rescaled.
        if (!to.defined_at(al)) {
          w["reason"] = "a_l outside " + to.validity().to_string();
          rep.record(label + ",exact", false, w);
          continue;
        }
        const Rational c = to(al) / alpha;
        const bool ok = l == j ? c == target : c >= target;
        if (!ok) w["c^{E_j}(a_l)"] = str(c);
        rep.record(label + (l == j ? ",equal" : ",exact"), ok, w);
      }
    }
  }
  // Cylinder component: c^{Z(m/k)}(E(a,1)) = k a / m.
  const Rational slope = frac(k, m);
  const bool slope_ok = cbar.left_slope() == slope;
  rep.record("cylinder,slope", slope_ok,
             {{"left_slope", str(cbar.left_slope())}, {"k/m", str(slope)}});
  const PiecewiseLinearFn line({{1, slope}});
  const PlComparison cmp = pl_compare(cbar, line);
  const bool below = cmp.order == PlOrder::kLessEq || cmp.order == PlOrder::kEqual;
  nlohmann::json w;
  if (!below) w["witness"] = str(*cmp.above_witness);
  rep.record("cylinder,dominates", below, w);
  return rep;
}

VerificationReport verify_representation2(std::int64_t k) {
  if (k < 2) throw DomainError("verify_representation2 needs k >= 2");
  const std::int64_t m = plateau_count(k);
  VerificationReport rep("xk2", {{"k", k}});
  rep.note("proof obligations verified, not the embedding capacities themselves");
  const PiecewiseLinearFn cbar = normalized_eh_pl(k);
  const std::vector<CapacityExpr> basis{CapacityExpr::volume(), CapacityExpr::normalized_eh(2)};

  for (std::int64_t j = 1; j <= m; ++j) {
    const Region ekj = build_Ekj(k, j);
    const ScaledEllipsoid se = as_scaled(frac(m, k + 1 - j), frac(m, j));
    const PartialFn from = embed_from_fn(ExtRat(se.b));
    for (std::int64_t l = 1; l <= m; ++l) {
      const Rational bl = plateau_end(k, l);
      const Rational target = frac(l, m);
      const std::string label = "j=" + std::to_string(j) + ",l=" + std::to_string(l);
      nlohmann::json w{{"j", j}, {"l", l}, {"b_l", str(bl)}, {"cbar_k", str(target)}};
      if (cbar(bl) != target) {
        w["reason"] = "c-bar_k(b_l) differs from l/m";
        rep.record(label, false, w);
        continue;
      }
      std::optional<Rational> exact;
      if (from.defined_at(bl)) exact = from(bl) / se.alpha;
      if (l == j) {
        const bool ok = exact && *exact == target;
        if (!ok) w["reason"] = exact ? "value " + str(*exact) : "b_j outside validity";
        rep.record(label + ",equal", ok, w);
        continue;
      }
      // Upper bound for c_{E_{k,j}}(b_l): the exact formula where it is
      // valid, otherwise volume and c-bar_2 quotients.
      ExactReal ub = inner_embedding_upper_bound(ekj, ellipsoid_a1(bl), basis);
      std::string how = "quotient";
      if (exact && ExactReal(*exact) < ub) {
        ub = ExactReal(*exact);
        how = "formula";
      }
      const bool ok = ub <= ExactReal(target);
      if (!ok) {
        w["upper_bound"] = ub.to_string();
        w["source"] = how;
      }
      rep.record(label + (l < j ? ",below" : ",bound"), ok, w);
    }
    // Near 0, c_{E_{k,j}}(a) = (k+1-j) a / m may not exceed c-bar_k = k a / m.
    const Rational s = frac(k + 1 - j, m);
    rep.record("j=" + std::to_string(j) + ",slope", s <= cbar.left_slope(),
               {{"slope", str(s)}, {"left_slope", str(cbar.left_slope())}});
  }
  return rep;
}

VerificationReport verify_polydisc_representation(std::int64_t k, std::int64_t grid) {
  if (k < 1 || grid < 1) throw DomainError("need k >= 1 and a nonempty grid");
  const std::int64_t m = plateau_count(k);
  VerificationReport rep("pol", {{"k", k}, {"grid", grid}});
  const Region yk = build_Yk(k);
  const std::vector<CapacityExpr> gromov{CapacityExpr::gromov_radius()};
  const std::vector<CapacityExpr> ehk{CapacityExpr::eh(k)};
  const ExtRat ym(m);

  for (std::int64_t j = 1; j <= k / 2; ++j) {
    const Region ej = Region::ellipsoid({ExtRat(frac(m, k - j)), ExtRat(frac(m, j))});
    const ExtRat c = eh_capacity(ej, k);
    rep.record("eh_k(E_j),j=" + std::to_string(j), c == ym, {{"value", c.to_string()}});
  }
  const ExtRat cz = eh_capacity(yk, k);
  rep.record("eh_k(Y_k)", cz == ym, {{"value", cz.to_string()}});

  for (std::int64_t i = 1; i <= grid; ++i) {
    const Rational a = frac(i, grid);
    const Region p = Region::polydisc({ExtRat(a), 1});
    const ExtRat cbar = normalized_eh(p, k);
    const Rational expect = frac(k, m) * a;
    const ExactReal into_y = embedding_lower_bound(yk, p, gromov);
    const bool ok = cbar == ExtRat(expect) && into_y == ExactReal(expect);
    nlohmann::json w;
    if (!ok) w = {{"a", str(a)}, {"cbar_k", cbar.to_string()}, {"c^Y", into_y.to_string()}};
    rep.record("identity,a=" + str(a), ok, w);
    for (std::int64_t j = 1; j <= k / 2; ++j) {
      const Region ej = Region::ellipsoid({ExtRat(frac(m, k - j)), ExtRat(frac(m, j))});
      const ExactReal lb = embedding_lower_bound(ej, p, ehk);
      const bool ok2 = lb >= ExactReal(cbar);
      nlohmann::json w2;
      if (!ok2) w2 = {{"a", str(a)}, {"j", j}, {"lower_bound", lb.to_string()}};
      rep.record("corollary,a=" + str(a) + ",j=" + std::to_string(j), ok2, w2);
    }
  }
  return rep;
}

VerificationReport verify_corollary_2ml(std::int64_t r, std::int64_t s) {
  if (r < 1 || s < 1) throw DomainError("need r, s >= 1");
  VerificationReport rep("cor2ml", {{"r", r}, {"s", s}});
  const PlComparison c = pl_compare(normalized_eh_pl(2 * r * s), normalized_eh_pl(2 * r));
  const bool ok = c.order == PlOrder::kLessEq || c.order == PlOrder::kEqual;
  nlohmann::json w;
  if (!ok) w["witness"] = str(*c.above_witness);
  rep.record("cbar_" + std::to_string(2 * r * s) + "<=cbar_" + std::to_string(2 * r), ok, w);
  if (c.order == PlOrder::kEqual) rep.note("equal");
  return rep;
}

VerificationReport lipschitz_check(const PiecewiseLinearFn& f) {
  VerificationReport rep("lipschitz", {{"function", f.to_string()}});
  std::size_t equalities = 0;
  const auto& ks = f.knots();
  // First segment: f(a)/a -> slope + f(0+)/a, never below the slope.
  if (sgn(f.value_at_zero()) == 0) ++equalities;
  rep.record("segment#0", true);
  for (std::size_t i = 1; i < ks.size(); ++i) {
    const Rational s = f.slope(i);
    const Rational ratio = ks[i - 1].y / ks[i - 1].x;
    const bool ok = s <= ratio;
    if (s == ratio) ++equalities;
    nlohmann::json w;
    if (!ok) w = {{"left_end", str(ks[i - 1].x)}, {"slope", str(s)}, {"f(a)/a", str(ratio)}};
    rep.record("segment#" + std::to_string(i), ok, w);
  }
  rep.note("segments with slope equal to f(a)/a: " + std::to_string(equalities) + " of " +
           std::to_string(ks.size()));
  return rep;
}

VerificationReport polydisc_linear_bound_check(const std::vector<CapacityExpr>& exprs,
                                               const std::vector<Rational>& grid) {
  nlohmann::json names = nlohmann::json::array();
  for (const CapacityExpr& e : exprs) names.push_back(e.to_string());
  VerificationReport rep("polydisc_linear_bound", {{"exprs", names}, {"grid", grid.size()}});
  for (const CapacityExpr& e : exprs) {
    for (const Rational& a : grid) {
      check_unit_interval(a);
      const CapacityValue v = eval_expr(e, Region::polydisc({ExtRat(a), 1}));
      if (v.conjectural) throw ConjecturalTaintError("conjectural capacity: " + e.to_string());
      const ExactReal bound = ExactReal(frac(1, 2) + a / 2) + ExactReal::root(a, 2);
      const bool ok = v.value <= bound;
      nlohmann::json w;
      if (!ok) w = {{"a", str(a)}, {"value", v.value.to_string()}, {"bound", bound.to_string()}};
      rep.record(e.to_string() + "@" + str(a), ok, w);
      if (v.value == bound) rep.note("equality for " + e.to_string() + " at a=" + str(a));
    }
  }
  return rep;
}

VerificationReport verify_limit_table(std::int64_t max_k) {
  VerificationReport rep("limell", {{"max_k", max_k}});
  for (std::int64_t k = 2; k <= max_k; ++k) {
    const std::int64_t m = plateau_count(k);
    const Rational closed = k % 2 == 0 ? frac(1, k + 1) : frac(m - 1, m * k);
    const Extrema e = difference_extrema(normalized_eh_pl(k));
    const ExactReal sup = symcap::max(e.max, -e.min);
    const bool ok = sup == ExactReal(closed);
    nlohmann::json w;
    if (!ok) w = {{"k", k}, {"sup", sup.to_string()}, {"closed_form", str(closed)}};
    rep.record("sup,k=" + std::to_string(k), ok, w);
    const bool sign_ok = k % 2 == 0 ? e.min.sign() >= 0 : e.max.sign() <= 0;
    nlohmann::json w2;
    if (!sign_ok) w2 = {{"k", k}, {"min", e.min.to_string()}, {"max", e.max.to_string()}};
    rep.record("sign,k=" + std::to_string(k), sign_ok, w2);
  }
  return rep;
}

}  // namespace symcap::dim4
