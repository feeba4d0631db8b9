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

#include "symcap/classic.hpp"

#include "symcap/errors.hpp"

namespace symcap {

namespace {

const std::vector<ExtRat>& simple_axes(const Region& r, const char* what) {
  if (const Ellipsoid* e = r.as_ellipsoid()) return e->axes;
  if (const Polydisc* p = r.as_polydisc()) return p->widths;
  throw UnsupportedError(std::string(what) + " is only available on ellipsoids and polydiscs: " +
                         r.to_string());
}

ExtRat factorial(std::size_t n) {
  ExtRat f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= ExtRat(static_cast<std::int64_t>(i));
  return f;
}

}  // namespace

ExtRat gromov_radius(const Region& r) { return simple_axes(r, "Gromov radius").front(); }

ExtRat raw_volume(const Region& r) {
  if (!r.is_bounded()) return ExtRat::infinity();
  if (const Ellipsoid* e = r.as_ellipsoid()) {
    ExtRat v = 1;
    for (const ExtRat& a : e->axes) v *= a;
    return v / factorial(e->axes.size());
  }
  if (const Polydisc* p = r.as_polydisc()) {
    ExtRat v = 1;
    for (const ExtRat& a : p->widths) v *= a;
    return v;
  }
  if (const Product* p = r.as_product()) {
    ExtRat v = 1;
    for (const Region& f : p->factors) v *= raw_volume(f);
    return v;
  }
  ExtRat v = 0;
  for (const Region& c : r.as_union()->components) v += raw_volume(c);
  return v;
}

AlgValue volume_capacity(const Region& r) {
  const ExtRat v = raw_volume(r);
  if (v.is_infinite()) return AlgValue(v);
  const std::size_t n = r.half_dimension();
  return AlgValue(v * factorial(n), static_cast<std::uint32_t>(n));
}

FlaggedValue lagrangian_capacity(const Region& r) {
  if (const Ellipsoid* e = r.as_ellipsoid()) {
    ExtRat s = 0;
    for (const ExtRat& a : e->axes) s += a.reciprocal();
    return {s.reciprocal(), true};
  }
  if (const Polydisc* p = r.as_polydisc()) return {p->widths.front(), false};
  throw UnsupportedError("Lagrangian capacity is only available on ellipsoids and polydiscs: " +
                         r.to_string());
}

std::optional<CapacityAlias> parse_capacity_alias(std::string_view name) {
  if (name == "hz") return CapacityAlias::kHoferZehnder;
  if (name == "displacement") return CapacityAlias::kDisplacement;
  if (name == "cz") return CapacityAlias::kCZ;
  if (name == "eh1") return CapacityAlias::kEH1;
  return std::nullopt;
}

ExtRat normalized_alias_value(CapacityAlias, const Region& r) {
  return simple_axes(r, "capacity alias").front();
}

}  // namespace symcap
