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

#ifndef SYMCAP_CAPACITY_EXPR_HPP_
#define SYMCAP_CAPACITY_EXPR_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symcap/alg_value.hpp"
#include "symcap/classic.hpp"
#include "symcap/exact_real.hpp"
#include "symcap/ext_rat.hpp"
#include "symcap/region.hpp"
#include "symcap/report.hpp"

namespace symcap {

// Expression tree of capacities. Leaves are the capacities computed by the
// spectrum and classic modules; inner nodes are homogeneous monotone
// combinators, so every tree is again a generalized capacity.
class CapacityExpr {
 public:
  enum class Kind {
    kGromovRadius,
    kEH,
    kNormalizedEH,
    kVolume,
    kLimit,
    kLagrangian,
    kAlias,
    kMin,
    kMax,
    kArithmeticMean,
    kGeometricMean,
    kHarmonicMean,
    kScale,
  };

  static CapacityExpr gromov_radius();
  static CapacityExpr eh(std::int64_t k);
  static CapacityExpr normalized_eh(std::int64_t k);
  static CapacityExpr volume();
  static CapacityExpr limit();
  static CapacityExpr lagrangian();
  static CapacityExpr alias(CapacityAlias a);

  static CapacityExpr min(std::vector<CapacityExpr> args);
  static CapacityExpr max(std::vector<CapacityExpr> args);
  // Weights must be nonnegative rationals summing to 1, one per argument.
  static CapacityExpr arithmetic_mean(std::vector<Rational> weights, std::vector<CapacityExpr> args);
  static CapacityExpr geometric_mean(std::vector<Rational> weights, std::vector<CapacityExpr> args);
  static CapacityExpr harmonic_mean(std::vector<Rational> weights, std::vector<CapacityExpr> args);
  // alpha * c for a rational alpha > 0.
  static CapacityExpr scale(Rational alpha, CapacityExpr arg);

  Kind kind() const;
  std::int64_t index() const;
  CapacityAlias alias_kind() const;
  const Rational& factor() const;
  const std::vector<Rational>& weights() const;
  const std::vector<CapacityExpr>& args() const;

  bool is_leaf() const;
  // True when some leaf is the conjectural Lagrangian formula.
  bool conjectural() const;
  // True when evaluation stays within monomials (no sums of radicals), so
  // the tree may be fed to a geometric mean.
  bool monomial_valued() const;

  // Text in the CLI capacity grammar, e.g. "amean(1/2,1/2;gromov,neh:2)".
  std::string to_string() const;

 private:
  struct Node;
  explicit CapacityExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static CapacityExpr leaf(Kind k, std::int64_t index = 0);
  static CapacityExpr mean(Kind k, std::vector<Rational> weights, std::vector<CapacityExpr> args);

  std::shared_ptr<const Node> node_;
};

struct CapacityValue {
  ExactReal value;
  bool conjectural = false;
};

// Exact value of e on r. Leaves that do not support r raise
// UnsupportedError; conjectural leaves set the flag.
CapacityValue eval_expr(const CapacityExpr& e, const Region& r);

struct OrderedPair {
  Region smaller;
  Region larger;
};

// Monotonicity on each inclusion pair and conformality eval(alpha R) =
// alpha eval(R) for each sample region and scalar.
VerificationReport check_axioms(const CapacityExpr& e, const std::vector<OrderedPair>& pairs,
                                const std::vector<ExtRat>& scalars);

// max over the basis of c(source)/c(target): a lower bound for the
// infimal alpha with source embedding into alpha*target. Basis elements
// that vanish or are infinite on target are skipped. Conjectural basis
// elements raise ConjecturalTaintError.
ExactReal embedding_lower_bound(const Region& target, const Region& source,
                                const std::vector<CapacityExpr>& basis);

// min over the basis of c(container)/c(model): an upper bound for the
// supremal alpha with alpha*model embedding into container.
ExactReal inner_embedding_upper_bound(const Region& model, const Region& container,
                                      const std::vector<CapacityExpr>& basis);

// c_vol(M) / c_vol(k disjoint copies of X).
AlgValue packing_volume_bound(const Region& x, std::int64_t k, const Region& m);

// (a^(n-1) vol(B) / vol(X))^(1/n), a lower bound for the embedding
// function a -> c^X(E(a,1,...,1)) for ellipsoids that fill little volume.
AlgValue skinny_volume_bound(const Region& x, const ExtRat& a);

}  // namespace symcap

#endif  // SYMCAP_CAPACITY_EXPR_HPP_
