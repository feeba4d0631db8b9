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

#ifndef SYMCAP_CLI_HPP_
#define SYMCAP_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "symcap/capacity_expr.hpp"
#include "symcap/exact_real.hpp"
#include "symcap/reconstruct.hpp"
#include "symcap/region.hpp"

namespace symcap::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kUnsupported = 3,
  kNeedsMoreData = 4,
};

// union   := product ('+' product)*
// product := atom ('x' atom)*
// atom    := E(v,...) | P(v,...) | B<2n>(v) | Z<2n>(v) | '(' union ')'
// v       := p | p/q | inf
Region parse_region(std::string_view text);

// gromov | vol | cinf | lagrangian | hz | displacement | cz | eh1
// | eh:k | neh:k | min(c,...) | max(c,...) | scale(q;c)
// | amean(w,...;c,...) | gmean(...) | hmean(...)
CapacityExpr parse_capacity(std::string_view text);

// "pi" when every leaf carries a factor pi, "1" when none does, else "mixed".
std::string units_of(const CapacityExpr& e);

// p/q, or (q)^(1/n) for monomials, or the general radical form.
std::string exact_string(const ExactReal& x);
// Decimal with `digits` places, from a rigorous enclosure.
std::string approx_string(const ExactReal& x, int digits = 12);

int cmd_compute(const std::string& region, const std::string& capacity, std::ostream& out,
                std::ostream& err);
int cmd_table(const std::string& region, const std::vector<std::string>& capacities,
              std::ostream& out, std::ostream& err);
// fi0: bounds for c^B; fi1: c-bar_1..6 and c_inf; fi2: embedding functions for b = 5/2.
int cmd_plotdata(const std::string& figure, std::int64_t samples, std::ostream& out,
                 std::ostream& err);
int cmd_verify(const std::string& target, std::ostream& out, std::ostream& err);
int cmd_reconstruct(std::istream& in, std::size_t n, std::size_t n0, ReconstructStrategy strategy,
                    std::ostream& out, std::ostream& err);

// Full command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symcap::cli

#endif  // SYMCAP_CLI_HPP_
