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

#include "symcap/capacity_expr.hpp"

#include <algorithm>

#include "symcap/errors.hpp"
#include "symcap/spectrum.hpp"

namespace symcap {

struct CapacityExpr::Node {
  Kind kind;
  std::int64_t index = 0;
  CapacityAlias alias = CapacityAlias::kHoferZehnder;
  Rational factor = 1;
  std::vector<Rational> weights;
  std::vector<CapacityExpr> args;
};

namespace {

const char* alias_name(CapacityAlias a) {
  switch (a) {
    case CapacityAlias::kHoferZehnder: return "hz";
    case CapacityAlias::kDisplacement: return "displacement";
    case CapacityAlias::kCZ: return "cz";
    case CapacityAlias::kEH1: return "eh1";
  }
  return "?";
}

std::string join_exprs(const std::vector<CapacityExpr>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ",";
    s += args[i].to_string();
  }
  return s;
}

std::string join_weights(const std::vector<Rational>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += rational_to_string(w[i]);
  }
  return s;
}

ExactReal ext(const ExtRat& q) { return ExactReal(q); }

}  // namespace

CapacityExpr CapacityExpr::leaf(Kind k, std::int64_t index) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->index = index;
  return CapacityExpr(std::move(n));
}

CapacityExpr CapacityExpr::gromov_radius() { return leaf(Kind::kGromovRadius); }

CapacityExpr CapacityExpr::eh(std::int64_t k) {
  if (k < 1 || k > kMaxEhIndex) throw DomainError("EH index out of range");
  return leaf(Kind::kEH, k);
}

CapacityExpr CapacityExpr::normalized_eh(std::int64_t k) {
  if (k < 1 || k > kMaxEhIndex) throw DomainError("EH index out of range");
  return leaf(Kind::kNormalizedEH, k);
}

CapacityExpr CapacityExpr::volume() { return leaf(Kind::kVolume); }
CapacityExpr CapacityExpr::limit() { return leaf(Kind::kLimit); }
CapacityExpr CapacityExpr::lagrangian() { return leaf(Kind::kLagrangian); }

CapacityExpr CapacityExpr::alias(CapacityAlias a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAlias;
  n->alias = a;
  return CapacityExpr(std::move(n));
}

CapacityExpr CapacityExpr::min(std::vector<CapacityExpr> args) {
  if (args.empty()) throw DomainError("min needs an argument");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kMin;
  n->args = std::move(args);
  return CapacityExpr(std::move(n));
}

CapacityExpr CapacityExpr::max(std::vector<CapacityExpr> args) {
  if (args.empty()) throw DomainError("max needs an argument");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kMax;
  n->args = std::move(args);
  return CapacityExpr(std::move(n));
}

CapacityExpr CapacityExpr::mean(Kind k, std::vector<Rational> weights,
                                std::vector<CapacityExpr> args) {
  if (args.empty() || weights.size() != args.size()) {
    throw DomainError("mean needs one weight per argument");
  }
  Rational total = 0;
  for (Rational& w : weights) {
    w.canonicalize();
    if (sgn(w) < 0) throw DomainError("negative weight " + rational_to_string(w));
    total += w;
  }
  if (total != 1) throw DomainError("weights sum to " + rational_to_string(total) + ", not 1");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->weights = std::move(weights);
  n->args = std::move(args);
  return CapacityExpr(std::move(n));
}

CapacityExpr CapacityExpr::arithmetic_mean(std::vector<Rational> w, std::vector<CapacityExpr> a) {
  return mean(Kind::kArithmeticMean, std::move(w), std::move(a));
}

CapacityExpr CapacityExpr::geometric_mean(std::vector<Rational> w, std::vector<CapacityExpr> a) {
  return mean(Kind::kGeometricMean, std::move(w), std::move(a));
}

CapacityExpr CapacityExpr::harmonic_mean(std::vector<Rational> w, std::vector<CapacityExpr> a) {
  return mean(Kind::kHarmonicMean, std::move(w), std::move(a));
}

CapacityExpr CapacityExpr::scale(Rational alpha, CapacityExpr arg) {
  alpha.canonicalize();
  if (sgn(alpha) <= 0) throw DomainError("scale factor must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kScale;
  n->factor = std::move(alpha);
  n->args.push_back(std::move(arg));
  return CapacityExpr(std::move(n));
}

CapacityExpr::Kind CapacityExpr::kind() const { return node_->kind; }
std::int64_t CapacityExpr::index() const { return node_->index; }
CapacityAlias CapacityExpr::alias_kind() const { return node_->alias; }
const Rational& CapacityExpr::factor() const { return node_->factor; }
const std::vector<Rational>& CapacityExpr::weights() const { return node_->weights; }
const std::vector<CapacityExpr>& CapacityExpr::args() const { return node_->args; }

bool CapacityExpr::is_leaf() const { return node_->args.empty(); }

bool CapacityExpr::conjectural() const {
  if (node_->kind == Kind::kLagrangian) return true;
  return std::any_of(node_->args.begin(), node_->args.end(),
                     [](const CapacityExpr& a) { return a.conjectural(); });
}

bool CapacityExpr::monomial_valued() const {
  switch (node_->kind) {
    case Kind::kArithmeticMean:
    case Kind::kHarmonicMean:
      return false;
    default:
      return std::all_of(node_->args.begin(), node_->args.end(),
                         [](const CapacityExpr& a) { return a.monomial_valued(); });
  }
}

std::string CapacityExpr::to_string() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kGromovRadius: return "gromov";
    case Kind::kEH: return "eh:" + std::to_string(n.index);
    case Kind::kNormalizedEH: return "neh:" + std::to_string(n.index);
    case Kind::kVolume: return "vol";
    case Kind::kLimit: return "cinf";
    case Kind::kLagrangian: return "lagrangian";
    case Kind::kAlias: return alias_name(n.alias);
    case Kind::kMin: return "min(" + join_exprs(n.args) + ")";
    case Kind::kMax: return "max(" + join_exprs(n.args) + ")";
    case Kind::kArithmeticMean:
      return "amean(" + join_weights(n.weights) + ";" + join_exprs(n.args) + ")";
    case Kind::kGeometricMean:
      return "gmean(" + join_weights(n.weights) + ";" + join_exprs(n.args) + ")";
    case Kind::kHarmonicMean:
      return "hmean(" + join_weights(n.weights) + ";" + join_exprs(n.args) + ")";
    case Kind::kScale: return "scale(" + rational_to_string(n.factor) + ";" + n.args[0].to_string() + ")";
  }
  return "?";
}

CapacityValue eval_expr(const CapacityExpr& e, const Region& r) {
  using Kind = CapacityExpr::Kind;
  switch (e.kind()) {
    case Kind::kGromovRadius: return {ext(gromov_radius(r))};
    case Kind::kEH: return {ext(eh_capacity(r, e.index()))};
    case Kind::kNormalizedEH: return {ext(normalized_eh(r, e.index()))};
    case Kind::kVolume: return {volume_capacity(r).to_exact()};
    case Kind::kLimit: return {ext(limit_capacity(r))};
    case Kind::kLagrangian: {
      const FlaggedValue v = lagrangian_capacity(r);
      return {ext(v.value), v.conjectural};
    }
    case Kind::kAlias: return {ext(normalized_alias_value(e.alias_kind(), r))};
    default: break;
  }

  std::vector<CapacityValue> vals;
  bool tainted = false;
  for (const CapacityExpr& a : e.args()) {
    vals.push_back(eval_expr(a, r));
    tainted |= vals.back().conjectural;
  }
  const std::vector<Rational>& w = e.weights();
  switch (e.kind()) {
    case Kind::kMin: {
      ExactReal v = vals[0].value;
      for (const CapacityValue& x : vals) v = symcap::min(v, x.value);
      return {v, tainted};
    }
    case Kind::kMax: {
      ExactReal v = vals[0].value;
      for (const CapacityValue& x : vals) v = symcap::max(v, x.value);
      return {v, tainted};
    }
    case Kind::kScale: return {ExactReal(e.factor()) * vals[0].value, tainted};
    case Kind::kArithmeticMean: {
      ExactReal s = 0;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (sgn(w[i]) == 0) continue;
        if (vals[i].value.is_infinite()) return {ExactReal::infinity(), tainted};
        s += ExactReal(w[i]) * vals[i].value;
      }
      return {s, tainted};
    }
    case Kind::kGeometricMean: {
      ExactReal p = 1;
      bool zero = false, inf = false;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (sgn(w[i]) == 0) continue;
        if (vals[i].value.is_zero()) {
          zero = true;
        } else if (vals[i].value.is_infinite()) {
          inf = true;
        } else {
          p *= vals[i].value.pow(w[i]);
        }
      }
      if (zero && inf) throw UnsupportedError("geometric mean of 0 and inf");
      if (zero) return {ExactReal(0), tainted};
      if (inf) return {ExactReal::infinity(), tainted};
      return {p, tainted};
    }
    case Kind::kHarmonicMean: {
      ExactReal s = 0;
      for (std::size_t i = 0; i < vals.size(); ++i) {
        if (sgn(w[i]) == 0 || vals[i].value.is_infinite()) continue;
        if (vals[i].value.is_zero()) return {ExactReal(0), tainted};
        s += ExactReal(w[i]) / vals[i].value;
      }
      if (s.is_zero()) return {ExactReal::infinity(), tainted};
      return {ExactReal(1) / s, tainted};
    }
    default: break;
  }
  throw std::logic_error("unhandled capacity expression kind");
}

VerificationReport check_axioms(const CapacityExpr& e, const std::vector<OrderedPair>& pairs,
                                const std::vector<ExtRat>& scalars) {
  nlohmann::json params = {{"expr", e.to_string()},
                           {"pairs", pairs.size()},
                           {"scalars", scalars.size()}};
  VerificationReport rep("axioms", params);
  if (e.conjectural()) rep.note("expression uses a conjectural formula; axioms checked on the formula");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const OrderedPair& p = pairs[i];
    const ExactReal lo = eval_expr(e, p.smaller).value;
    const ExactReal hi = eval_expr(e, p.larger).value;
    const bool ok = lo <= hi;
    nlohmann::json w;
    if (!ok) {
      w = {{"smaller", p.smaller.to_string()}, {"larger", p.larger.to_string()},
           {"value_smaller", lo.to_string()}, {"value_larger", hi.to_string()}};
    }
    rep.record("monotone#" + std::to_string(i), ok, w);
    for (const ExtRat& alpha : scalars) {
      const ExactReal scaled = eval_expr(e, p.smaller.scaled(alpha)).value;
      const ExactReal expect = ExactReal(alpha) * lo;
      const bool ok2 = scaled == expect;
      nlohmann::json w2;
      if (!ok2) {
        w2 = {{"region", p.smaller.to_string()}, {"alpha", alpha.to_string()},
              {"value_scaled", scaled.to_string()}, {"alpha_times_value", expect.to_string()}};
      }
      rep.record("conformal#" + std::to_string(i) + "@" + alpha.to_string(), ok2, w2);
    }
  }
  return rep;
}

namespace {

// Ratios c(num)/c(den) over the basis elements where c(den) is finite and
// positive.
std::vector<ExactReal> basis_ratios(const Region& den, const Region& num,
                                    const std::vector<CapacityExpr>& basis) {
  std::vector<ExactReal> out;
  for (const CapacityExpr& c : basis) {
    if (c.conjectural()) {
      throw ConjecturalTaintError("conjectural capacity in an embedding bound: " + c.to_string());
    }
    const ExactReal d = eval_expr(c, den).value;
    if (d.is_zero() || d.is_infinite()) continue;
    const ExactReal n = eval_expr(c, num).value;
    out.push_back(n.is_infinite() ? n : n / d);
  }
  if (out.empty()) throw UnsupportedError("no basis capacity is finite and positive on the model");
  return out;
}

}  // namespace

ExactReal embedding_lower_bound(const Region& target, const Region& source,
                                const std::vector<CapacityExpr>& basis) {
  const std::vector<ExactReal> r = basis_ratios(target, source, basis);
  ExactReal best = r.front();
  for (const ExactReal& x : r) best = symcap::max(best, x);
  return best;
}

ExactReal inner_embedding_upper_bound(const Region& model, const Region& container,
                                      const std::vector<CapacityExpr>& basis) {
  const std::vector<ExactReal> r = basis_ratios(model, container, basis);
  ExactReal best = r.front();
  for (const ExactReal& x : r) best = symcap::min(best, x);
  return best;
}

AlgValue packing_volume_bound(const Region& x, std::int64_t k, const Region& m) {
  if (k < 1) throw DomainError("packing needs k >= 1");
  if (x.half_dimension() != m.half_dimension()) throw DomainError("dimension mismatch");
  const ExtRat vx = raw_volume(x);
  if (vx.is_infinite()) throw UnsupportedError("packing bound needs a finite-volume model");
  const ExtRat vm = raw_volume(m);
  return AlgValue(vm / (ExtRat(k) * vx), static_cast<std::uint32_t>(x.half_dimension()));
}

AlgValue skinny_volume_bound(const Region& x, const ExtRat& a) {
  if (a.is_zero() || a > ExtRat(1)) throw DomainError("a must lie in (0,1]");
  const ExtRat vx = raw_volume(x);
  if (vx.is_infinite()) throw UnsupportedError("skinny volume bound needs a finite-volume model");
  const std::size_t n = x.half_dimension();
  ExtRat num = 1;
  for (std::size_t i = 1; i < n; ++i) num *= a;
  ExtRat ball = 1;
  for (std::size_t i = 2; i <= n; ++i) ball *= ExtRat(static_cast<std::int64_t>(i));
  return AlgValue(num / (ball * vx), static_cast<std::uint32_t>(n));
}

}  // namespace symcap
