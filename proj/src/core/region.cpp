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

#include "symcap/region.hpp"

#include <algorithm>
#include <ostream>

#include "symcap/errors.hpp"

namespace symcap {

namespace {

std::vector<ExtRat> checked_sorted(std::vector<ExtRat> v, const char* what) {
  if (v.empty()) throw DomainError(std::string(what) + " needs at least one entry");
  bool any_finite = false;
  for (const ExtRat& a : v) {
    if (a.is_zero()) throw DomainError(std::string(what) + " entries must be positive");
    any_finite |= a.is_finite();
  }
  if (!any_finite) throw DomainError(std::string(what) + " needs a finite entry");
  std::sort(v.begin(), v.end());
  return v;
}

std::string list_to_string(const std::vector<ExtRat>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s;
}

}  // namespace

Region Region::ellipsoid(std::vector<ExtRat> axes) {
  return Region(Ellipsoid{checked_sorted(std::move(axes), "ellipsoid")});
}

Region Region::polydisc(std::vector<ExtRat> widths) {
  return Region(Polydisc{checked_sorted(std::move(widths), "polydisc")});
}

Region Region::ball(std::size_t dimension, const ExtRat& r) {
  if (dimension == 0 || dimension % 2 != 0) throw DomainError("ball dimension must be even");
  return ellipsoid(std::vector<ExtRat>(dimension / 2, r));
}

Region Region::cylinder(std::size_t dimension, const ExtRat& r) {
  if (dimension == 0 || dimension % 2 != 0) throw DomainError("cylinder dimension must be even");
  std::vector<ExtRat> axes(dimension / 2, ExtRat::infinity());
  axes[0] = r;
  return ellipsoid(std::move(axes));
}

Region Region::product(std::vector<Region> factors) {
  if (factors.empty()) throw DomainError("empty product");
  if (factors.size() == 1) return std::move(factors.front());
  std::vector<Region> flat;
  for (Region& f : factors) {
    if (const Product* p = f.as_product()) {
      flat.insert(flat.end(), p->factors.begin(), p->factors.end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  return Region(Product{std::move(flat)});
}

Region Region::disjoint_union(std::vector<Region> components) {
  if (components.empty()) throw DomainError("empty disjoint union");
  std::vector<Region> flat;
  for (Region& c : components) {
    if (const DisjointUnion* u = c.as_union()) {
      flat.insert(flat.end(), u->components.begin(), u->components.end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  const std::size_t n = flat.front().half_dimension();
  for (const Region& c : flat) {
    if (c.half_dimension() != n) throw DomainError("disjoint union components differ in dimension");
  }
  if (flat.size() == 1) return std::move(flat.front());
  return Region(DisjointUnion{std::move(flat)});
}

std::size_t Region::half_dimension() const {
  return std::visit(
      [](const auto& r) -> std::size_t {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return r.axes.size();
        } else if constexpr (std::is_same_v<T, Polydisc>) {
          return r.widths.size();
        } else if constexpr (std::is_same_v<T, Product>) {
          std::size_t n = 0;
          for (const Region& f : r.factors) n += f.half_dimension();
          return n;
        } else {
          return r.components.front().half_dimension();
        }
      },
      v_);
}

bool Region::is_bounded() const {
  return std::visit(
      [](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return r.axes.back().is_finite();
        } else if constexpr (std::is_same_v<T, Polydisc>) {
          return r.widths.back().is_finite();
        } else if constexpr (std::is_same_v<T, Product>) {
          return std::all_of(r.factors.begin(), r.factors.end(),
                             [](const Region& f) { return f.is_bounded(); });
        } else {
          return std::all_of(r.components.begin(), r.components.end(),
                             [](const Region& c) { return c.is_bounded(); });
        }
      },
      v_);
}

Region Region::scaled(const ExtRat& alpha) const {
  if (alpha.is_zero() || alpha.is_infinite()) throw DomainError("scale factor must be finite positive");
  auto scale_all = [&](std::vector<ExtRat> v) {
    for (ExtRat& a : v) a *= alpha;
    return v;
  };
  return std::visit(
      [&](const auto& r) -> Region {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return Region::ellipsoid(scale_all(r.axes));
        } else if constexpr (std::is_same_v<T, Polydisc>) {
          return Region::polydisc(scale_all(r.widths));
        } else if constexpr (std::is_same_v<T, Product>) {
          std::vector<Region> out;
          for (const Region& f : r.factors) out.push_back(f.scaled(alpha));
          return Region::product(std::move(out));
        } else {
          std::vector<Region> out;
          for (const Region& c : r.components) out.push_back(c.scaled(alpha));
          return Region::disjoint_union(std::move(out));
        }
      },
      v_);
}

std::string Region::to_string() const {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return "E(" + list_to_string(r.axes) + ")";
        } else if constexpr (std::is_same_v<T, Polydisc>) {
          return "P(" + list_to_string(r.widths) + ")";
        } else if constexpr (std::is_same_v<T, Product>) {
          std::string s;
          for (std::size_t i = 0; i < r.factors.size(); ++i) {
            if (i) s += "x";
            const Region& f = r.factors[i];
            s += f.as_union() ? "(" + f.to_string() + ")" : f.to_string();
          }
          return s;
        } else {
          std::string s;
          for (std::size_t i = 0; i < r.components.size(); ++i) {
            if (i) s += "+";
            s += r.components[i].to_string();
          }
          return s;
        }
      },
      v_);
}

bool operator==(const Region& a, const Region& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (const Product* p = a.as_product()) {
    return p->factors == b.as_product()->factors;
  }
  if (const DisjointUnion* u = a.as_union()) {
    return u->components == b.as_union()->components;
  }
  if (const Ellipsoid* e = a.as_ellipsoid()) return *e == *b.as_ellipsoid();
  return *a.as_polydisc() == *b.as_polydisc();
}

std::ostream& operator<<(std::ostream& os, const Region& r) { return os << r.to_string(); }

}  // namespace symcap
