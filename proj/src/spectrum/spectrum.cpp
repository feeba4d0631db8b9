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

#include "symcap/spectrum.hpp"

#include <algorithm>
#include <string>

#include "symcap/errors.hpp"

namespace symcap {

namespace {

void check_index(std::int64_t k) {
  if (k < 1 || k > kMaxEhIndex) {
    throw DomainError("EH index must lie in [1, " + std::to_string(kMaxEhIndex) + "], got " +
                      std::to_string(k));
  }
}

// Min-plus convolution with c_0 = 0 on both sides.
std::vector<ExtRat> chekanov_fold(const std::vector<ExtRat>& f, const std::vector<ExtRat>& g) {
  const std::size_t k = f.size();
  std::vector<ExtRat> h(k);
  for (std::size_t s = 1; s <= k; ++s) {
    ExtRat best = std::min(f[s - 1], g[s - 1]);
    for (std::size_t i = 1; i < s; ++i) {
      const ExtRat v = f[i - 1] + g[s - i - 1];
      if (v < best) best = v;
    }
    h[s - 1] = best;
  }
  return h;
}

}  // namespace

SpectrumStream::SpectrumStream(const Ellipsoid& e) {
  for (const ExtRat& a : e.axes) {
    if (a.is_finite()) axes_.push_back(a.value());
  }
  if (axes_.empty()) throw DomainError("ellipsoid has no finite axis");
  for (std::size_t i = 0; i < axes_.size(); ++i) heap_.push({axes_[i], i, 1});
}

Rational SpectrumStream::next() {
  Head h = heap_.top();
  heap_.pop();
  heap_.push({axes_[h.axis] * (h.multiple + 1), h.axis, h.multiple + 1});
  return h.value;
}

std::vector<ExtRat> spectrum_prefix(const Ellipsoid& e, std::int64_t count) {
  check_index(count);
  SpectrumStream s(e);
  std::vector<ExtRat> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.emplace_back(s.next());
  return out;
}

std::vector<ExtRat> eh_capacities(const Region& r, std::int64_t k) {
  check_index(k);
  if (const Ellipsoid* e = r.as_ellipsoid()) return spectrum_prefix(*e, k);
  if (const Polydisc* p = r.as_polydisc()) {
    std::vector<ExtRat> out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 1; i <= k; ++i) out.push_back(ExtRat(i) * p->widths.front());
    return out;
  }
  if (const Product* p = r.as_product()) {
    std::vector<ExtRat> acc = eh_capacities(p->factors.front(), k);
    for (std::size_t i = 1; i < p->factors.size(); ++i) {
      acc = chekanov_fold(acc, eh_capacities(p->factors[i], k));
    }
    return acc;
  }
  throw UnsupportedError("EH capacity undefined here: " + r.to_string());
}

ExtRat eh_capacity(const Region& r, std::int64_t k) {
  check_index(k);
  if (const Ellipsoid* e = r.as_ellipsoid()) {
    SpectrumStream s(*e);
    Rational v;
    for (std::int64_t i = 0; i < k; ++i) v = s.next();
    return ExtRat(v);
  }
  if (const Polydisc* p = r.as_polydisc()) return ExtRat(k) * p->widths.front();
  return eh_capacities(r, k).back();
}

ExtRat normalized_eh(const Region& r, std::int64_t k) {
  const ExtRat c = eh_capacity(r, k);
  return c / ExtRat(ball_eh_index(k, static_cast<std::int64_t>(r.half_dimension())));
}

ExtRat limit_capacity(const Region& r) {
  if (const Ellipsoid* e = r.as_ellipsoid()) {
    ExtRat s = 0;
    for (const ExtRat& a : e->axes) s += a.reciprocal();
    return ExtRat(static_cast<std::int64_t>(e->axes.size())) / s;
  }
  if (const Polydisc* p = r.as_polydisc()) {
    return ExtRat(static_cast<std::int64_t>(p->widths.size())) * p->widths.front();
  }
  throw UnsupportedError("limit capacity is only known on ellipsoids and polydiscs: " +
                         r.to_string());
}

ExtRat convergence_bound(const Ellipsoid& e, std::int64_t k) {
  check_index(k);
  if (e.axes.back() != ExtRat(1)) {
    throw DomainError("convergence bound expects a bounded ellipsoid with largest axis 1");
  }
  const Rational n = static_cast<long>(e.axes.size());
  const Rational delta = e.axes.front().value() / 2;
  const Rational denom = Rational(static_cast<long>(k)) * delta - 2 * n;
  if (sgn(denom) <= 0) throw DomainError("bound not applicable: need k > 4n/a_1");
  return ExtRat(Rational(2 * n / denom));
}

}  // namespace symcap
