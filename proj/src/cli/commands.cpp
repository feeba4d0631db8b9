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

#include <gmp.h>

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "symcap/alg_value.hpp"
#include "symcap/cli.hpp"
#include "symcap/dim4.hpp"
#include "symcap/errors.hpp"
#include "symcap/spectrum_checks.hpp"

namespace symcap::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

Rational frac(std::int64_t p, std::int64_t q) {
  Rational r(static_cast<long>(p), static_cast<long>(q));
  r.canonicalize();
  return r;
}

// Sample grid i/samples plus the given breakpoints, sorted and unique.
std::vector<Rational> sample_points(std::int64_t samples, std::vector<Rational> extra) {
  for (std::int64_t i = 1; i <= samples; ++i) extra.push_back(frac(i, samples));
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  extra.erase(std::remove_if(extra.begin(), extra.end(),
                             [](const Rational& a) { return sgn(a) <= 0 || a > 1; }),
              extra.end());
  return extra;
}

std::string cell(const ExactReal& x) { return exact_string(x) + "," + approx_string(x); }

// Maps library exceptions to exit codes with a message on err.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedSpectrumError& e) {
    err << "error: malformed spectrum: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ConjecturalTaintError& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  }
}

std::vector<std::string> expand_ranges(const std::vector<std::string>& caps) {
  std::vector<std::string> out;
  for (const std::string& c : caps) {
    const auto colon = c.find(':');
    const auto dots = c.find("..");
    const std::string head = colon == std::string::npos ? "" : c.substr(0, colon);
    if ((head == "eh" || head == "neh") && dots != std::string::npos) {
      std::int64_t lo = 0, hi = 0;
      try {
        lo = std::stoll(c.substr(colon + 1, dots - colon - 1));
        hi = std::stoll(c.substr(dots + 2));
      } catch (const std::exception&) {
        throw ParseError("bad index range '" + c + "'");
      }
      if (lo < 1 || hi < lo || hi - lo > 100000) throw ParseError("bad index range '" + c + "'");
      for (std::int64_t k = lo; k <= hi; ++k) out.push_back(head + ":" + std::to_string(k));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::pair<std::string, std::string> split_target(const std::string& t) {
  const auto colon = t.find(':');
  if (colon == std::string::npos) return {t, ""};
  return {t.substr(0, colon), t.substr(colon + 1)};
}

std::int64_t int_arg(const std::string& s, const std::string& target) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), ::isdigit)) {
    throw ParseError("bad parameter in verify target '" + target + "'");
  }
  return std::stoll(s);
}

}  // namespace

std::string exact_string(const ExactReal& x) {
  if (x.is_infinite()) return "inf";
  if (auto q = x.as_rational()) return rational_to_string(*q);
  if (x.is_monomial() && x.sign() > 0) {
    const ExactReal::Term& t = x.numerator_terms().front();
    Rational r;
    {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), t.coeff.get_num_mpz_t(), t.index);
      mpz_pow_ui(den.get_mpz_t(), t.coeff.get_den_mpz_t(), t.index);
      r = Rational(num * t.radicand, den);
      r.canonicalize();
    }
    return AlgValue(ExtRat(r), t.index).to_string();
  }
  return x.to_string();
}

std::string approx_string(const ExactReal& x, int digits) {
  if (x.is_infinite()) return "inf";
  const auto [lo, hi] = x.enclose(96);
  const Rational mid = (lo + hi) / 2;
  mpf_class f(mid, 256);
  char buf[256];
  gmp_snprintf(buf, sizeof buf, "%.*Ff", digits, f.get_mpf_t());
  std::string s = buf;
  if (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos) s = s.substr(1);
  return s;
}

int cmd_compute(const std::string& region, const std::string& capacity, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const Region r = parse_region(region);
    const CapacityExpr e = parse_capacity(capacity);
    const CapacityValue v = eval_expr(e, r);
    out << "exact=" << exact_string(v.value) << " approx=" << approx_string(v.value)
        << " units=" << units_of(e);
    if (v.conjectural) out << " conjectural=true";
    out << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_table(const std::string& region, const std::vector<std::string>& capacities,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Region r = parse_region(region);
    std::vector<std::pair<std::string, CapacityExpr>> exprs;
    for (const std::string& c : expand_ranges(capacities)) exprs.emplace_back(c, parse_capacity(c));
    std::ostringstream body;
    body << "capacity,exact,approx\n";
    for (const auto& [name, e] : exprs) {
      const CapacityValue v = eval_expr(e, r);
      body << csv_field(name) << "," << cell(v.value) << "\n";
    }
    out << body.str();
    return static_cast<int>(kOk);
  });
}

int cmd_plotdata(const std::string& figure, std::int64_t samples, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (samples < 2) throw ParseError("samples must be at least 2");
    std::ostringstream csv;
    if (figure == "fi1") {
      std::vector<PiecewiseLinearFn> fs;
      std::vector<Rational> bps;
      for (std::int64_t k = 1; k <= 6; ++k) {
        fs.push_back(dim4::normalized_eh_pl(k));
        for (const Rational& b : fs.back().breakpoints()) bps.push_back(b);
      }
      csv << "a,a_approx";
      for (std::int64_t k = 1; k <= 6; ++k) csv << ",cbar_" << k << ",cbar_" << k << "_approx";
      csv << ",c_inf,c_inf_approx\n";
      for (const Rational& a : sample_points(samples, bps)) {
        csv << cell(ExactReal(a));
        for (const PiecewiseLinearFn& f : fs) csv << "," << cell(ExactReal(f(a)));
        csv << "," << cell(ExactReal(dim4::c_infinity_4d(ExtRat(a)))) << "\n";
      }
    } else if (figure == "fi2") {
      const ExtRat b(5, 2);
      const dim4::PartialFn to = dim4::embed_to_fn(b), from = dim4::embed_from_fn(b);
      std::vector<Rational> bps = to.body().breakpoints();
      for (const Rational& x : from.body().breakpoints()) bps.push_back(x);
      bps.push_back(to.validity().lo);
      bps.push_back(from.validity().hi);
      csv << "# b=5/2; empty cells lie outside the range where the formula is known\n";
      csv << "a,a_approx,embed_to,embed_to_approx,embed_from,embed_from_approx\n";
      for (const Rational& a : sample_points(samples, bps)) {
        csv << cell(ExactReal(a));
        csv << "," << (to.defined_at(a) ? cell(ExactReal(to(a))) : ",");
        csv << "," << (from.defined_at(a) ? cell(ExactReal(from(a))) : ",");
        csv << "\n";
      }
    } else if (figure == "fi0") {
      constexpr std::int64_t kMaxK = 12;
      std::vector<Rational> bps{frac(1, 2)};
      for (std::int64_t k = 1; k <= kMaxK; ++k) {
        bps.push_back(frac(1, k * (k + 1)));
        bps.push_back(frac(1, k * (k + 2)));
        for (const Rational& x : dim4::normalized_eh_pl(k).breakpoints()) bps.push_back(x);
      }
      csv << "# s(1/4) ~ " << dim4::kMultipleFoldingAtQuarter
          << " (multiple folding; reference value only, curve not modelled)\n";
      csv << "a,a_approx,lower,lower_approx,upper,upper_approx\n";
      for (const Rational& a : sample_points(samples, bps)) {
        const dim4::Bounds bd = dim4::cB_bounds(ExtRat(a), kMaxK);
        csv << cell(ExactReal(a)) << "," << cell(bd.lower) << "," << cell(bd.upper) << "\n";
      }
    } else {
      throw ParseError("unknown figure '" + figure + "' (expected fi0, fi1 or fi2)");
    }
    out << csv.str();
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const std::string& target, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto [name, arg] = split_target(target);
    std::optional<VerificationReport> rep;
    if (name == "limell" && arg.empty()) {
      rep = dim4::verify_limit_table(50);
    } else if (name == "xk") {
      rep = dim4::verify_representation(int_arg(arg, target));
    } else if (name == "xk2") {
      rep = dim4::verify_representation2(int_arg(arg, target));
    } else if (name == "pol") {
      rep = dim4::verify_polydisc_representation(int_arg(arg, target));
    } else if (name == "cor2ml") {
      const auto comma = arg.find(',');
      if (comma == std::string::npos) throw ParseError("cor2ml expects r,s");
      rep = dim4::verify_corollary_2ml(int_arg(arg.substr(0, comma), target),
                                       int_arg(arg.substr(comma + 1), target));
    } else if (name == "chekanov" && arg.empty()) {
      rep = verify_chekanov();
    } else if (name == "ex333") {
      rep = verify_ex333(int_arg(arg, target));
    } else if (name == "lipschitz") {
      rep = dim4::lipschitz_check(dim4::normalized_eh_pl(int_arg(arg, target)));
    } else {
      throw ParseError("unknown verify target '" + target + "'");
    }
    out << rep->to_json().dump(2) << "\n";
    return rep->passed() ? kOk : kVerifyFailed;
  });
}

int cmd_reconstruct(std::istream& in, std::size_t n, std::size_t n0, ReconstructStrategy strategy,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    SpectrumInput input{parse_spectrum(in), n, n0};
    const ReconstructResult r = reconstruct(input, strategy);
    if (r.status == ReconstructStatus::kNeedsMoreData) {
      err << "needs more data: " << r.reason << "\n";
      return kNeedsMoreData;
    }
    for (std::size_t i = 0; i < r.axes.size(); ++i) out << (i ? ", " : "") << r.axes[i];
    out << "\n";
    return kOk;
  });
}

}  // namespace symcap::cli
