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

#ifndef SYMCAP_SPECTRUM_HPP_
#define SYMCAP_SPECTRUM_HPP_

#include <cstddef>
#include <cstdint>
#include <queue>
#include <vector>

#include "symcap/ext_rat.hpp"
#include "symcap/region.hpp"

namespace symcap {

// Largest EH index accepted anywhere.
inline constexpr std::int64_t kMaxEhIndex = 1'000'000;

// Sorted merge of the progressions {m a_i : m >= 1} over the finite axes of
// an ellipsoid, with multiplicity. Equal values coming from different axes
// are emitted once per axis.
class SpectrumStream {
 public:
  explicit SpectrumStream(const Ellipsoid& e);

  Rational next();

 private:
  struct Head {
    Rational value;
    std::size_t axis;
    std::int64_t multiple;
  };
  struct Later {
    bool operator()(const Head& a, const Head& b) const {
      if (a.value != b.value) return a.value > b.value;
      return a.axis > b.axis;
    }
  };
  std::vector<Rational> axes_;
  std::priority_queue<Head, std::vector<Head>, Later> heap_;
};

// d_1 <= ... <= d_count. Throws DomainError for count < 1 or count > kMaxEhIndex.
std::vector<ExtRat> spectrum_prefix(const Ellipsoid& e, std::int64_t count);

// c^EH_k in units of pi. Ellipsoids: d_k. Polydiscs: k min(widths).
// Products: min over i+j=k of c_i(U) + c_j(V), with c_0 = 0. Disjoint
// unions raise UnsupportedError.
ExtRat eh_capacity(const Region& r, std::int64_t k);

// c^EH_1 .. c^EH_k in one pass; the same rules as eh_capacity.
std::vector<ExtRat> eh_capacities(const Region& r, std::int64_t k);

// c^EH_k divided by its value floor((k+n-1)/n) on the unit ball.
ExtRat normalized_eh(const Region& r, std::int64_t k);

// lim c-bar_k: n / sum(1/a_i) on ellipsoids, n min(widths) on polydiscs.
ExtRat limit_capacity(const Region& r);

// Upper bound for |c-bar_k(E) - c_inf(E)| on a bounded ellipsoid with
// largest axis 1: 2n / (k d - 2n) with d = a_1 / 2, valid once k > 4n / a_1.
// DomainError if the axes are not normalized or k is too small.
ExtRat convergence_bound(const Ellipsoid& e, std::int64_t k);

}  // namespace symcap

#endif  // SYMCAP_SPECTRUM_HPP_
