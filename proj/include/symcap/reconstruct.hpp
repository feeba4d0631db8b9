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

#ifndef SYMCAP_RECONSTRUCT_HPP_
#define SYMCAP_RECONSTRUCT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "symcap/ext_rat.hpp"

namespace symcap {

// coeff * u_unit, where u_0 = 1 and u_i = sqrt(p_i) for the i-th prime p_i.
// Values with distinct units are never rational multiples of each other,
// which is all the reconstruction needs from an incommensurable axis.
struct TaggedValue {
  Rational coeff;
  std::uint32_t unit = 0;

  TaggedValue() = default;
  TaggedValue(Rational c, std::uint32_t u = 0);  // NOLINT(runtime/explicit)

  // "p/q" or "p/q*u<i>".
  static TaggedValue parse(std::string_view text);
  std::string to_string() const;
  double to_double() const;

  friend bool operator==(const TaggedValue& a, const TaggedValue& b) {
    return a.unit == b.unit && a.coeff == b.coeff;
  }
  friend std::strong_ordering operator<=>(const TaggedValue& a, const TaggedValue& b);
};

std::ostream& operator<<(std::ostream& os, const TaggedValue& v);

std::vector<TaggedValue> to_tagged(const std::vector<ExtRat>& values);

// The first `count` elements of the sorted multiset {m a_i}.
std::vector<TaggedValue> tagged_spectrum_prefix(const std::vector<TaggedValue>& axes,
                                                std::size_t count);

// One value per line, `#` starts a comment, blank lines are skipped.
// ParseError on bad tokens or a decreasing sequence.
std::vector<TaggedValue> parse_spectrum(std::istream& in);

struct SpectrumInput {
  std::vector<TaggedValue> values;  // nondecreasing, positive
  std::size_t n = 1;
  std::size_t n0 = 0;
};

enum class ReconstructStrategy {
  kBlocks,  // block/gap algorithm: classes, maximal blocks, minimal gaps
  kSearch,  // exhaustive candidate search for the smallest remaining axis
  kAuto,    // blocks, then search when blocks needs a longer prefix
};

enum class ReconstructStatus { kOk, kNeedsMoreData };

struct ReconstructResult {
  ReconstructStatus status = ReconstructStatus::kNeedsMoreData;
  std::vector<TaggedValue> axes;  // nondecreasing when ok
  ReconstructStrategy used = ReconstructStrategy::kAuto;
  std::string reason;
};

// Recovers the axes of a bounded ellipsoid from a spectrum prefix with at
// most n0 entries removed. The entries equal to the largest value are
// discarded first, since later copies of that value may lie past the cut.
// Every answer is checked by regenerating the spectrum below the cut.
// MalformedSpectrumError when no ellipsoid fits.
ReconstructResult reconstruct(const SpectrumInput& input,
                              ReconstructStrategy strategy = ReconstructStrategy::kAuto);

// Returns the first `count` elements of a (damaged) spectrum.
using SpectrumOracle = std::function<std::vector<TaggedValue>(std::size_t count)>;

struct AdaptiveResult {
  std::vector<TaggedValue> axes;
  std::size_t prefix_length = 0;
};

// Doubles the prefix length until reconstruct succeeds; CapExceededError
// once `cap` elements did not suffice.
AdaptiveResult reconstruct_adaptive(const SpectrumOracle& oracle, std::size_t n, std::size_t n0,
                                    std::size_t cap,
                                    ReconstructStrategy strategy = ReconstructStrategy::kAuto);

}  // namespace symcap

#endif  // SYMCAP_RECONSTRUCT_HPP_
