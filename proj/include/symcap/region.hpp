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

#ifndef SYMCAP_REGION_HPP_
#define SYMCAP_REGION_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "symcap/ext_rat.hpp"

namespace symcap {

class Region;

// E(a_1, ..., a_n) = { sum |z_i|^2 / a_i < 1 } in C^n, axes measured as
// areas (units of pi). Axes are kept sorted; +inf entries are allowed as
// long as one axis is finite.
struct Ellipsoid {
  std::vector<ExtRat> axes;
  friend bool operator==(const Ellipsoid&, const Ellipsoid&) = default;
};

// P(a_1, ..., a_n): product of discs of area pi a_i, widths sorted.
struct Polydisc {
  std::vector<ExtRat> widths;
  friend bool operator==(const Polydisc&, const Polydisc&) = default;
};

struct Product {
  std::vector<Region> factors;
};

struct DisjointUnion {
  std::vector<Region> components;
};

// Tagged union of the region kinds. Constructors validate and normalize:
// axes are sorted, nested products and unions are flattened, and union
// components must share a dimension.
class Region {
 public:
  using Variant = std::variant<Ellipsoid, Polydisc, Product, DisjointUnion>;

  static Region ellipsoid(std::vector<ExtRat> axes);
  static Region polydisc(std::vector<ExtRat> widths);
  // B^{2n}(r) = E(r, ..., r); dimension is the real dimension 2n.
  static Region ball(std::size_t dimension, const ExtRat& r);
  // Z^{2n}(r) = E(r, inf, ..., inf).
  static Region cylinder(std::size_t dimension, const ExtRat& r);
  static Region product(std::vector<Region> factors);
  static Region disjoint_union(std::vector<Region> components);

  const Variant& variant() const { return v_; }
  const Ellipsoid* as_ellipsoid() const { return std::get_if<Ellipsoid>(&v_); }
  const Polydisc* as_polydisc() const { return std::get_if<Polydisc>(&v_); }
  const Product* as_product() const { return std::get_if<Product>(&v_); }
  const DisjointUnion* as_union() const { return std::get_if<DisjointUnion>(&v_); }

  // n, with the region living in R^{2n}.
  std::size_t half_dimension() const;
  bool is_bounded() const;
  // The region with symplectic form scaled by alpha: every area scales by
  // alpha, so E(a) becomes E(alpha a).
  Region scaled(const ExtRat& alpha) const;

  // Canonical text in the CLI grammar, e.g. "E(1,4)xP(1/2,inf)+E(2,2,2)".
  std::string to_string() const;

  friend bool operator==(const Region& a, const Region& b);

 private:
  explicit Region(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

std::ostream& operator<<(std::ostream& os, const Region& r);

}  // namespace symcap

#endif  // SYMCAP_REGION_HPP_
