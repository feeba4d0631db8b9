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

#ifndef SYMCAP_CLASSIC_HPP_
#define SYMCAP_CLASSIC_HPP_

#include <optional>
#include <string_view>

#include "symcap/alg_value.hpp"
#include "symcap/ext_rat.hpp"
#include "symcap/region.hpp"

namespace symcap {

// c_B: min of the axes or widths, units of pi.
ExtRat gromov_radius(const Region& r);

// vol(R) / pi^n: prod(a)/n! on E(a), prod(a) on P(a); multiplied over
// product factors and added over union components. Infinite when unbounded.
ExtRat raw_volume(const Region& r);

// (vol(R) / vol(B^{2n}))^(1/n).
AlgValue volume_capacity(const Region& r);

struct FlaggedValue {
  ExtRat value;
  bool conjectural = false;
};

// 1/sum(1/a_i) on ellipsoids (conjectural) and min(widths) on polydiscs.
FlaggedValue lagrangian_capacity(const Region& r);

enum class CapacityAlias { kHoferZehnder, kDisplacement, kCZ, kEH1 };

std::optional<CapacityAlias> parse_capacity_alias(std::string_view name);

// The common value min(axes) of the aliases on ellipsoids and polydiscs.
ExtRat normalized_alias_value(CapacityAlias alias, const Region& r);

}  // namespace symcap

#endif  // SYMCAP_CLASSIC_HPP_
