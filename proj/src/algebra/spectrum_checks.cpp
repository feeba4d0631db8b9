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

#include "symcap/spectrum_checks.hpp"

#include <string>

#include "symcap/classic.hpp"
#include "symcap/errors.hpp"
#include "symcap/spectrum.hpp"

namespace symcap {

VerificationReport verify_chekanov() {
  const Region u = Region::ball(4, 4);
  const Region v = Region::ellipsoid({3, 8});
  const Region uv = Region::product({u, v});
  VerificationReport rep("chekanov", {{"U", u.to_string()}, {"V", v.to_string()}, {"k", 3}});
  const ExtRat prod = eh_capacity(uv, 3);
  const ExtRat cu = eh_capacity(u, 3), cv = eh_capacity(v, 3);
  const ExtRat mn = std::min(cu, cv);
  rep.record("c3(UxV)=7", prod == ExtRat(7), {{"value", prod.to_string()}});
  rep.record("min(c3(U),c3(V))=8", mn == ExtRat(8),
             {{"c3(U)", cu.to_string()}, {"c3(V)", cv.to_string()}});
  rep.record("product<min", prod < mn, {{"product", prod.to_string()}, {"min", mn.to_string()}});
  // The first two capacities still have the product property.
  for (std::int64_t k = 1; k <= 2; ++k) {
    const ExtRat p = eh_capacity(uv, k);
    const ExtRat m = std::min(eh_capacity(u, k), eh_capacity(v, k));
    rep.record("c" + std::to_string(k) + " product property", p == m,
               {{"product", p.to_string()}, {"min", m.to_string()}});
  }
  return rep;
}

VerificationReport verify_ex333(std::int64_t n, std::int64_t max_k) {
  if (n < 1 || n > 12) throw DomainError("ex333 needs 1 <= n <= 12");
  std::int64_t big = 1;
  for (std::int64_t i = 0; i < n; ++i) big *= 3;
  std::vector<ExtRat> ea(static_cast<std::size_t>(n), 1);
  ea.back() = big + 1;
  const Region e = Region::ellipsoid(ea);
  const Region f = Region::ellipsoid(std::vector<ExtRat>(static_cast<std::size_t>(n), 3));
  VerificationReport rep("ex333", {{"n", n}, {"max_k", max_k}, {"E", e.to_string()}, {"F", f.to_string()}});
  const std::vector<ExtRat> ce = eh_capacities(e, max_k), cf = eh_capacities(f, max_k);
  std::int64_t bad = 0;
  for (std::int64_t k = 1; k <= max_k; ++k) {
    const ExtRat& x = ce[static_cast<std::size_t>(k - 1)];
    const ExtRat& y = cf[static_cast<std::size_t>(k - 1)];
    if (!(x < y)) {
      ++bad;
      rep.record("eh,k=" + std::to_string(k), false, {{"E", x.to_string()}, {"F", y.to_string()}});
    }
  }
  rep.record("eh,k<=" + std::to_string(max_k), bad == 0, {{"violations", bad}});
  const ExtRat le = limit_capacity(e), lf = limit_capacity(f);
  rep.record("cinf(E)<cinf(F)", le < lf, {{"E", le.to_string()}, {"F", lf.to_string()}});
  const AlgValue ve = volume_capacity(e), vf = volume_capacity(f);
  rep.record("cvol(E)>cvol(F)", ve > vf, {{"E", ve.to_string()}, {"F", vf.to_string()}});
  rep.note("all k: finite range checked exactly; beyond it c-bar_k tends to c_inf with c_inf(E) < c_inf(F)");
  return rep;
}

}  // namespace symcap
