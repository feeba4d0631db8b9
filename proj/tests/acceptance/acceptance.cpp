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

// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "../support/generators.hpp"
#include "symcap/alg_value.hpp"
#include "symcap/capacity_expr.hpp"
#include "symcap/classic.hpp"
#include "symcap/cli.hpp"
#include "symcap/dim4.hpp"
#include "symcap/reconstruct.hpp"
#include "symcap/spectrum.hpp"
#include "symcap/spectrum_checks.hpp"

using namespace symcap;
using symcap::testing::qq;

namespace {

// Wall-clock limits in seconds; nullopt where none is imposed.
constexpr double kLimitBallCylinder = 1.0;
constexpr double kLimitChekanov = 0.1;
constexpr double kLimitSupNorm = 5.0;
constexpr double kLimitRepresentation = 10.0;
constexpr double kLimitReconstruction = 30.0;

constexpr std::size_t kReconstructTrials = 100;
constexpr std::size_t kReconstructCap = 10000;
constexpr std::size_t kAxiomPairs = 1000;
constexpr std::size_t kAxiomExprs = 50;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, std::optional<double> limit,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit && secs > *limit) o.fail("runtime limit exceeded");
  char timing[96];
  if (limit) std::snprintf(timing, sizeof timing, "%.3fs, limit %.1fs", secs, *limit);
  else std::snprintf(timing, sizeof timing, "%.3fs, no limit", secs);
  std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " [" << timing << "] "
            << name;
  if (!o.ok) std::cout << " -- " << o.detail;
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(cell);
    if (!line.empty() && line.back() == ',') row.emplace_back();
    rows.push_back(row);
  }
  return rows;
}

std::size_t col(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::runtime_error("missing column " + name);
}

Region ell(const Rational& a) { return Region::ellipsoid({ExtRat(a), ExtRat(1)}); }

}  // namespace

int main() {
  criterion(1, "EH capacities of balls and cylinders, n<=4, k<=200", kLimitBallCylinder,
            [](Outcome& o) {
              for (std::int64_t n = 1; n <= 4; ++n) {
                const auto b = eh_capacities(Region::ball(2 * n, 1), 200);
                const auto z = eh_capacities(Region::cylinder(2 * n, 1), 200);
                for (std::int64_t k = 1; k <= 200; ++k) {
                  if (b[k - 1] != ExtRat((k + n - 1) / n)) o.fail("ball n=" + std::to_string(n));
                  if (z[k - 1] != ExtRat(k)) o.fail("cylinder n=" + std::to_string(n));
                }
              }
            });

  criterion(2, "Chekanov counterexample c3(B4(4)xE(3,8)) = 7 < 8", kLimitChekanov, [](Outcome& o) {
    const Region u = Region::ball(4, 4), v = Region::ellipsoid({3, 8});
    if (eh_capacity(Region::product({u, v}), 3) != ExtRat(7)) o.fail("product value");
    if (std::min(eh_capacity(u, 3), eh_capacity(v, 3)) != ExtRat(8)) o.fail("factor minimum");
  });

  criterion(3, "sup-norm distance of c-bar_k to c_inf, k<=50", kLimitSupNorm, [](Outcome& o) {
    for (std::int64_t k = 2; k <= 50; ++k) {
      const std::int64_t m = (k + 1) / 2;
      const Rational want = k % 2 == 0 ? qq(1, k + 1) : qq(m - 1, m * k);
      if (dim4::sup_distance_to_limit(k) != ExactReal(want)) o.fail("k=" + std::to_string(k));
    }
  });

  criterion(4, "sign of c-bar_k - c_inf: >=0 for even k, <=0 for odd k", std::nullopt,
            [](Outcome& o) {
              for (std::int64_t k = 1; k <= 50; ++k) {
                const dim4::Extrema e = dim4::difference_extrema(dim4::normalized_eh_pl(k));
                const bool ok = k % 2 == 0 ? e.min.sign() >= 0 : e.max.sign() <= 0;
                if (!ok) o.fail("k=" + std::to_string(k));
              }
            });

  criterion(5, "representation verifiers xk, xk2, pol for 2<=k<=30", kLimitRepresentation,
            [](Outcome& o) {
              for (std::int64_t k = 2; k <= 30; ++k) {
                if (!dim4::verify_representation(k).passed()) o.fail("xk:" + std::to_string(k));
                if (!dim4::verify_representation2(k).passed()) o.fail("xk2:" + std::to_string(k));
                if (!dim4::verify_polydisc_representation(k).passed()) {
                  o.fail("pol:" + std::to_string(k));
                }
              }
            });

  criterion(6, "c-bar_{2ml} vs c-bar_{2m} comparison for r*s<=50", std::nullopt, [](Outcome& o) {
    for (std::int64_t r = 1; r <= 50; ++r) {
      for (std::int64_t s = 1; r * s <= 50; ++s) {
        if (!dim4::verify_corollary_2ml(r, s).passed()) {
          o.fail("r=" + std::to_string(r) + " s=" + std::to_string(s));
        }
      }
    }
  });

  criterion(7, "reconstruction round trip, 100 ellipsoids, n0<=3, prefix<=1e4",
            kLimitReconstruction, [](Outcome& o) {
              using symcap::testing::DeletionPattern;
              std::mt19937_64 rng(20261016);
              const DeletionPattern patterns[] = {DeletionPattern::kFirst,
                                                  DeletionPattern::kBlockInterior,
                                                  DeletionPattern::kRandom};
              std::size_t longest = 0;
              for (std::size_t t = 0; t < kReconstructTrials; ++t) {
                const std::size_t n = 1 + t % 4;
                const auto axes = symcap::testing::random_axes(rng, n, 20);
                const auto full = tagged_spectrum_prefix(axes, kReconstructCap + 8);
                for (std::size_t n0 = 0; n0 <= 3; ++n0) {
                  const auto del =
                      symcap::testing::choose_deletions(full, n0, patterns[(t + n0) % 3], rng);
                  const AdaptiveResult r = reconstruct_adaptive(
                      symcap::testing::damaged_oracle(full, del), n, n0, kReconstructCap);
                  longest = std::max(longest, r.prefix_length);
                  if (r.axes != axes) o.fail("trial " + std::to_string(t));
                }
              }
              if (longest > kReconstructCap) o.fail("prefix too long");
            });

  criterion(8, "PL and spectrum normalized EH agree, k<=100, 200 grid points", std::nullopt,
            [](Outcome& o) {
              for (std::int64_t k = 1; k <= 100; ++k) {
                const PiecewiseLinearFn f = dim4::normalized_eh_pl(k);
                for (long i = 1; i <= 200; ++i) {
                  const Rational a = qq(i, 200);
                  if (ExtRat(f(a)) != normalized_eh(ell(a), k)) {
                    o.fail("k=" + std::to_string(k) + " a=" + rational_to_string(a));
                  }
                }
              }
            });

  criterion(9, "axioms for base capacities and 50 random combinators", std::nullopt,
            [](Outcome& o) {
              using CE = CapacityExpr;
              std::mt19937_64 rng(909);
              std::vector<OrderedPair> pairs;
              for (std::size_t i = 0; i < kAxiomPairs; ++i) {
                pairs.push_back(symcap::testing::random_ordered_pair(rng, 1 + i % 4));
              }
              std::vector<ExtRat> scalars;
              for (long s : {1L, 2L, 3L, 5L, 7L}) {
                scalars.emplace_back(s, 3);
                scalars.emplace_back(3, s + 1);
              }
              std::vector<CE> exprs{CE::gromov_radius(), CE::volume(), CE::limit(),
                                    CE::lagrangian()};
              for (auto a : {CapacityAlias::kHoferZehnder, CapacityAlias::kDisplacement,
                             CapacityAlias::kCZ, CapacityAlias::kEH1}) {
                exprs.push_back(CE::alias(a));
              }
              for (std::int64_t k = 1; k <= 12; ++k) {
                exprs.push_back(CE::eh(k));
                exprs.push_back(CE::normalized_eh(k));
              }
              for (std::size_t i = 0; i < kAxiomExprs; ++i) {
                exprs.push_back(symcap::testing::random_expr(rng, 3));
              }
              for (const CE& e : exprs) {
                if (!check_axioms(e, pairs, scalars).passed()) o.fail(e.to_string());
              }
            });

  criterion(10, "E(1,10) vs E(3,3) style example for n=2,3", std::nullopt, [](Outcome& o) {
    for (std::int64_t n : {2, 3}) {
      if (!verify_ex333(n, 500).passed()) o.fail("n=" + std::to_string(n));
    }
    if (!(volume_capacity(Region::ellipsoid({1, 10})) > volume_capacity(Region::ellipsoid({3, 3})))) {
      o.fail("volume ordering");
    }
  });

  criterion(11, "figure data: fi1 plateaus, fi0 bound ordering", std::nullopt, [](Outcome& o) {
    std::ostringstream out1, out0, err;
    if (cli::cmd_plotdata("fi1", 100, out1, err) != 0) return o.fail("fi1 exit code");
    if (cli::cmd_plotdata("fi0", 200, out0, err) != 0) return o.fail("fi0 exit code");

    const auto rows = csv(out1.str());
    const std::size_t ac = col(rows[0], "a");
    for (std::int64_t k = 1; k <= 6; ++k) {
      const std::size_t ck = col(rows[0], "cbar_" + std::to_string(k));
      for (std::int64_t l = 1; l <= dim4::plateau_count(k); ++l) {
        const Rational lo = dim4::plateau_start(k, l), hi = dim4::plateau_end(k, l);
        const ExtRat height = normalized_eh(ell(lo), k);
        bool saw_lo = false, saw_hi = false;
        for (std::size_t i = 1; i < rows.size(); ++i) {
          const Rational a = parse_rational(rows[i][ac]);
          if (a < lo || a > hi) continue;
          saw_lo |= a == lo;
          saw_hi |= a == hi;
          if (ExtRat::parse(rows[i][ck]) != height) o.fail("fi1 k=" + std::to_string(k));
        }
        if (!saw_lo || !saw_hi) o.fail("fi1 missing breakpoint k=" + std::to_string(k));
      }
    }
    const Rational c6lo[] = {qq(1, 6), qq(2, 5), qq(3, 4)};
    const Rational c6hi[] = {qq(1, 5), qq(1, 2), qq(1, 1)};
    for (std::int64_t l = 1; l <= 3; ++l) {
      if (dim4::plateau_start(6, l) != c6lo[l - 1] || dim4::plateau_end(6, l) != c6hi[l - 1] ||
          normalized_eh(ell(c6lo[l - 1]), 6) != ExtRat(qq(l, 3))) {
        o.fail("c-bar_6 plateau " + std::to_string(l));
      }
    }

    const auto b = csv(out0.str());
    const std::size_t a0 = col(b[0], "a"), lc = col(b[0], "lower"), uc = col(b[0], "upper");
    for (std::size_t i = 1; i < b.size(); ++i) {
      const AlgValue lower = AlgValue::parse(b[i][lc]), upper = AlgValue::parse(b[i][uc]);
      if (lower > upper) o.fail("fi0 lower > upper at a=" + b[i][a0]);
      if (parse_rational(b[i][a0]) >= qq(1, 2) && lower != upper) {
        o.fail("fi0 bounds differ at a=" + b[i][a0]);
      }
    }
    if (out0.str().find("0.6729") == std::string::npos) o.fail("fi0 reference comment");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
