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

#include "symcap/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <queue>
#include <set>

#include "symcap/errors.hpp"

namespace symcap {

namespace {

// p_u for the unit u_u = sqrt(p_u); p_0 = 1.
std::uint64_t unit_square(std::uint32_t unit) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes{1};
  std::lock_guard<std::mutex> lock(mu);
  for (std::uint64_t c = primes.size() == 1 ? 2 : primes.back() + 1; primes.size() <= unit; ++c) {
    bool prime = true;
    for (std::size_t i = 1; i < primes.size() && primes[i] * primes[i] <= c; ++i) {
      if (c % primes[i] == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes[unit];
}

TaggedValue times(const TaggedValue& v, std::int64_t j) {
  return TaggedValue(v.coeff * static_cast<long>(j), v.unit);
}

using Multiset = std::map<TaggedValue, std::int64_t>;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Values strictly below the largest input value, and that value.
struct Window {
  Multiset counts;
  std::size_t size = 0;
  TaggedValue horizon;
};

Window make_window(const SpectrumInput& in) {
  if (in.n == 0) throw DomainError("n must be positive");
  Window w;
  for (std::size_t i = 0; i < in.values.size(); ++i) {
    const TaggedValue& v = in.values[i];
    if (sgn(v.coeff) <= 0) throw MalformedSpectrumError("nonpositive value " + v.to_string());
    if (i > 0 && v < in.values[i - 1]) {
      throw MalformedSpectrumError("spectrum is not nondecreasing at position " +
                                   std::to_string(i + 1));
    }
  }
  if (in.values.empty()) return w;
  w.horizon = in.values.back();
  for (const TaggedValue& v : in.values) {
    if (v < w.horizon) {
      ++w.counts[v];
      ++w.size;
    }
  }
  return w;
}

// Spectrum of the axes strictly below the horizon.
Multiset spectrum_below(const std::vector<TaggedValue>& axes, const TaggedValue& horizon) {
  Multiset m;
  for (const TaggedValue& a : axes) {
    for (std::int64_t j = 1;; ++j) {
      const TaggedValue v = times(a, j);
      if (!(v < horizon)) break;
      ++m[v];
    }
  }
  return m;
}

// The input below the horizon must be the regenerated spectrum minus at
// most n0 entries.
void validate(const std::vector<TaggedValue>& axes, const Window& w, std::size_t n0) {
  const Multiset gen = spectrum_below(axes, w.horizon);
  std::int64_t total = 0;
  for (const auto& [v, c] : gen) total += c;
  for (const auto& [v, c] : w.counts) {
    auto it = gen.find(v);
    if (it == gen.end() || it->second < c) {
      throw MalformedSpectrumError("value " + v.to_string() + " is not explained by the axes");
    }
  }
  if (total - static_cast<std::int64_t>(w.size) > static_cast<std::int64_t>(n0)) {
    throw MalformedSpectrumError("more than n0 values missing for the recovered axes");
  }
}

ReconstructResult needs_more(ReconstructStrategy s, std::string why) {
  ReconstructResult r;
  r.status = ReconstructStatus::kNeedsMoreData;
  r.used = s;
  r.reason = std::move(why);
  return r;
}

// The block algorithm, run per commensurability class.
ReconstructResult run_blocks(const Window& w, const SpectrumInput& in) {
  std::map<std::uint32_t, std::map<Rational, std::int64_t>> classes;
  for (const auto& [v, c] : w.counts) classes[v.unit][v.coeff] += c;
  std::size_t total_len = 0;
  std::map<std::uint32_t, std::int64_t> block_len;
  for (const auto& [u, cls] : classes) {
    std::int64_t l = 0;
    for (const auto& [q, c] : cls) l = std::max(l, c);
    block_len[u] = l;
    total_len += static_cast<std::size_t>(l);
  }
  if (total_len < in.n) return needs_more(ReconstructStrategy::kBlocks, "block lengths sum below n");
  if (total_len > in.n) throw MalformedSpectrumError("more coinciding values than axes");

  std::vector<TaggedValue> axes;
  std::int64_t missed = 0;
  for (auto& [u, cls] : classes) {
    for (std::int64_t l = block_len[u]; l > 0; --l) {
      std::vector<Rational> gaps;
      for (auto it = cls.begin(); it != cls.end(); ++it) {
        if (it->second > l) throw MalformedSpectrumError("block longer than the remaining axes");
        auto nx = std::next(it);
        if (it->second == l && nx != cls.end()) gaps.push_back(nx->first - it->first);
        if (gaps.size() == in.n0 + 1) break;
      }
      if (gaps.size() < in.n0 + 1) {
        return needs_more(ReconstructStrategy::kBlocks, "fewer than n0+1 complete blocks");
      }
      const Rational a = *std::min_element(gaps.begin(), gaps.end());
      const TaggedValue axis(a, u);
      for (std::int64_t j = 1;; ++j) {
        const TaggedValue v = times(axis, j);
        if (!(v < w.horizon)) break;
        auto it = cls.find(v.coeff);
        if (it == cls.end()) {
          if (++missed > static_cast<std::int64_t>(in.n0)) {
            throw MalformedSpectrumError("too many multiples of " + axis.to_string() + " missing");
          }
        } else if (--it->second == 0) {
          cls.erase(it);
        }
      }
      axes.push_back(axis);
    }
    if (!cls.empty()) {
      throw MalformedSpectrumError("values left over in class u" + std::to_string(u));
    }
  }
  std::sort(axes.begin(), axes.end());
  validate(axes, w, in.n0);
  ReconstructResult r;
  r.status = ReconstructStatus::kOk;
  r.axes = std::move(axes);
  r.used = ReconstructStrategy::kBlocks;
  return r;
}

// Exhaustive search: the smallest remaining axis a satisfies a <= v_min and
// one of a, 2a, ..., (b+1)a survives b deletions, so a = w/j for a present
// value w <= (b+1) v_min. All solutions are collected; two distinct ones
// mean the prefix is too short to decide.
class Searcher {
 public:
  Searcher(Multiset counts, std::size_t size, TaggedValue horizon)
      : counts_(std::move(counts)), size_(size), horizon_(std::move(horizon)) {}

  void run(std::size_t axes_left, std::int64_t budget, const TaggedValue* lower) {
    if (solutions_.size() > 1) return;
    if (axes_left == 0) {
      if (size_ == 0) solutions_.push_back(chosen_);
      return;
    }
    if (size_ == 0) {
      blind_ = true;
      return;
    }
    const TaggedValue vmin = counts_.begin()->first;
    const TaggedValue reach = times(vmin, budget + 1);
    if (!(reach < horizon_)) {
      blind_ = true;
      return;
    }
    std::set<TaggedValue> candidates;
    for (const auto& [v, c] : counts_) {
      if (reach < v) break;
      for (std::int64_t j = 1; j <= budget + 1; ++j) {
        TaggedValue a(v.coeff / static_cast<long>(j), v.unit);
        if (vmin < a || (lower != nullptr && a < *lower)) continue;
        candidates.insert(std::move(a));
      }
    }
    for (const TaggedValue& a : candidates) {
      std::vector<TaggedValue> removed;
      std::int64_t misses = 0;
      for (std::int64_t j = 1;; ++j) {
        const TaggedValue v = times(a, j);
        if (!(v < horizon_)) break;
        auto it = counts_.find(v);
        if (it == counts_.end()) {
          if (++misses > budget) break;
          continue;
        }
        if (--it->second == 0) counts_.erase(it);
        --size_;
        removed.push_back(v);
      }
      if (misses <= budget) {
        chosen_.push_back(a);
        run(axes_left - 1, budget - misses, &a);
        chosen_.pop_back();
      }
      for (const TaggedValue& v : removed) ++counts_[v];
      size_ += removed.size();
      if (solutions_.size() > 1) return;
    }
  }

  const std::vector<std::vector<TaggedValue>>& solutions() const { return solutions_; }
  bool blind() const { return blind_; }

 private:
  Multiset counts_;
  std::size_t size_;
  TaggedValue horizon_;
  std::vector<TaggedValue> chosen_;
  std::vector<std::vector<TaggedValue>> solutions_;
  bool blind_ = false;
};

ReconstructResult run_search(const Window& w, const SpectrumInput& in) {
  Searcher s(w.counts, w.size, w.horizon);
  s.run(in.n, static_cast<std::int64_t>(in.n0), nullptr);
  if (s.solutions().size() > 1) {
    return needs_more(ReconstructStrategy::kSearch, "several ellipsoids fit this prefix");
  }
  if (s.solutions().empty()) {
    if (s.blind()) return needs_more(ReconstructStrategy::kSearch, "an axis may lie beyond the prefix");
    throw MalformedSpectrumError("no ellipsoid with n axes fits the spectrum");
  }
  if (s.blind()) {
    return needs_more(ReconstructStrategy::kSearch, "an alternative may lie beyond the prefix");
  }
  ReconstructResult r;
  r.status = ReconstructStatus::kOk;
  r.axes = s.solutions().front();
  r.used = ReconstructStrategy::kSearch;
  validate(r.axes, w, in.n0);
  return r;
}

}  // namespace

TaggedValue::TaggedValue(Rational c, std::uint32_t u) : coeff(std::move(c)), unit(u) {
  coeff.canonicalize();
}

TaggedValue TaggedValue::parse(std::string_view text) {
  text = trim(text);
  std::uint32_t unit = 0;
  const auto star = text.find('*');
  if (star != std::string_view::npos) {
    std::string_view u = trim(text.substr(star + 1));
    if (u.size() < 2 || u[0] != 'u' ||
        !std::all_of(u.begin() + 1, u.end(), [](char c) { return std::isdigit(c); }) ||
        u.size() > 7) {
      throw ParseError("bad unit tag '" + std::string(u) + "'");
    }
    unit = static_cast<std::uint32_t>(std::stoul(std::string(u.substr(1))));
    text = text.substr(0, star);
  }
  Rational q = parse_rational(text);
  if (sgn(q) <= 0) throw ParseError("spectrum values must be positive: '" + std::string(text) + "'");
  return TaggedValue(std::move(q), unit);
}

std::string TaggedValue::to_string() const {
  std::string s = rational_to_string(coeff);
  if (unit != 0) s += "*u" + std::to_string(unit);
  return s;
}

double TaggedValue::to_double() const {
  return coeff.get_d() * std::sqrt(static_cast<double>(unit_square(unit)));
}

std::strong_ordering operator<=>(const TaggedValue& a, const TaggedValue& b) {
  if (a.unit == b.unit) {
    const int c = cmp(a.coeff, b.coeff);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  // Positive values: compare squares. Distinct units never tie.
  const Rational l = a.coeff * a.coeff * static_cast<unsigned long>(unit_square(a.unit));
  const Rational r = b.coeff * b.coeff * static_cast<unsigned long>(unit_square(b.unit));
  if (sgn(a.coeff) >= 0 && sgn(b.coeff) >= 0) {
    if (l < r) return std::strong_ordering::less;
    if (r < l) return std::strong_ordering::greater;
  }
  return a.unit < b.unit ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::ostream& operator<<(std::ostream& os, const TaggedValue& v) { return os << v.to_string(); }

std::vector<TaggedValue> to_tagged(const std::vector<ExtRat>& values) {
  std::vector<TaggedValue> out;
  out.reserve(values.size());
  for (const ExtRat& v : values) out.emplace_back(v.value());
  return out;
}

std::vector<TaggedValue> tagged_spectrum_prefix(const std::vector<TaggedValue>& axes,
                                                std::size_t count) {
  if (axes.empty()) throw DomainError("no axes");
  struct Head {
    TaggedValue value;
    std::size_t axis;
    std::int64_t multiple;
    bool operator>(const Head& o) const {
      if (value != o.value) return value > o.value;
      return axis > o.axis;
    }
  };
  std::priority_queue<Head, std::vector<Head>, std::greater<>> heap;
  for (std::size_t i = 0; i < axes.size(); ++i) heap.push({axes[i], i, 1});
  std::vector<TaggedValue> out;
  out.reserve(count);
  while (out.size() < count) {
    Head h = heap.top();
    heap.pop();
    out.push_back(h.value);
    heap.push({times(axes[h.axis], h.multiple + 1), h.axis, h.multiple + 1});
  }
  return out;
}

std::vector<TaggedValue> parse_spectrum(std::istream& in) {
  std::vector<TaggedValue> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    TaggedValue v;
    try {
      v = TaggedValue::parse(s);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!out.empty() && v < out.back()) {
      throw ParseError("line " + std::to_string(lineno) + ": values must be nondecreasing");
    }
    out.push_back(std::move(v));
  }
  return out;
}

ReconstructResult reconstruct(const SpectrumInput& input, ReconstructStrategy strategy) {
  const Window w = make_window(input);
  if (w.size == 0) return needs_more(strategy, "no values below the largest one");
  switch (strategy) {
    case ReconstructStrategy::kBlocks: return run_blocks(w, input);
    case ReconstructStrategy::kSearch: return run_search(w, input);
    case ReconstructStrategy::kAuto: {
      ReconstructResult r = run_blocks(w, input);
      if (r.status == ReconstructStatus::kOk) return r;
      return run_search(w, input);
    }
  }
  throw std::logic_error("unknown strategy");
}

AdaptiveResult reconstruct_adaptive(const SpectrumOracle& oracle, std::size_t n, std::size_t n0,
                                    std::size_t cap, ReconstructStrategy strategy) {
  if (cap < 1) throw DomainError("cap must be positive");
  std::size_t len = std::min<std::size_t>(cap, std::max<std::size_t>(8, 2 * n + n0));
  for (;;) {
    SpectrumInput in{oracle(len), n, n0};
    const ReconstructResult r = reconstruct(in, strategy);
    if (r.status == ReconstructStatus::kOk) return {r.axes, len};
    if (len >= cap) {
      throw CapExceededError("no unique reconstruction within " + std::to_string(cap) +
                             " values: " + r.reason);
    }
    len = std::min(cap, 2 * len);
  }
}

}  // namespace symcap
