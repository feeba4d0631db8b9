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

#ifndef SYMCAP_SPECTRUM_CHECKS_HPP_
#define SYMCAP_SPECTRUM_CHECKS_HPP_

#include <cstdint>

#include "symcap/report.hpp"

namespace symcap {

// c^EH_3(B^4(4) x E(3,8)) = 7 while both factors have c^EH_3 = 8.
VerificationReport verify_chekanov();

// E = E(1,...,1,3^n+1) and F = E(3,...,3) in dimension 2n: c^EH_k(E) <
// c^EH_k(F) for k <= max_k, c_inf(E) < c_inf(F) for the tail, and
// c_vol(E) > c_vol(F).
VerificationReport verify_ex333(std::int64_t n, std::int64_t max_k = 500);

}  // namespace symcap

#endif  // SYMCAP_SPECTRUM_CHECKS_HPP_
