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

#include <cctype>
#include <string>

#include "symcap/classic.hpp"
#include "symcap/cli.hpp"
#include "symcap/errors.hpp"

namespace symcap::cli {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_end() { return peek() == '\0'; }

  template <typename Pred>
  std::string_view read_while(Pred p) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && p(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string_view identifier() {
    return read_while([](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
  }

  std::string_view number_token() {
    return read_while([](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '/' || c == '+' || c == '-';
    });
  }

  std::int64_t integer() {
    const std::string_view t =
        read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    if (t.empty() || t.size() > 12) fail("expected an integer");
    return std::stoll(std::string(t));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

ExtRat value(Cursor& c) {
  const std::string_view t =
      c.read_while([](char ch) { return ch != ',' && ch != ')' && ch != ';' && !std::isspace(static_cast<unsigned char>(ch)); });
  if (t.empty()) c.fail("expected a value");
  return ExtRat::parse(t);
}

std::vector<ExtRat> value_list(Cursor& c) {
  c.expect('(');
  std::vector<ExtRat> out{value(c)};
  while (c.eat(',')) out.push_back(value(c));
  c.expect(')');
  return out;
}

Region parse_union(Cursor& c);

Region parse_atom(Cursor& c) {
  const char ch = c.peek();
  if (ch == '(') {
    c.expect('(');
    Region r = parse_union(c);
    c.expect(')');
    return r;
  }
  if (ch == 'E' || ch == 'P') {
    c.eat(ch);
    std::vector<ExtRat> axes = value_list(c);
    return ch == 'E' ? Region::ellipsoid(std::move(axes)) : Region::polydisc(std::move(axes));
  }
  if (ch == 'B' || ch == 'Z') {
    c.eat(ch);
    const std::int64_t dim = c.integer();
    if (dim < 2 || dim % 2 != 0 || dim > 2000) c.fail("dimension must be even and positive");
    c.expect('(');
    const ExtRat r = value(c);
    c.expect(')');
    return ch == 'B' ? Region::ball(static_cast<std::size_t>(dim), r)
                     : Region::cylinder(static_cast<std::size_t>(dim), r);
  }
  c.fail("expected E(...), P(...), B<dim>(...), Z<dim>(...) or '('");
}

Region parse_product(Cursor& c) {
  std::vector<Region> parts{parse_atom(c)};
  while (c.eat('x')) parts.push_back(parse_atom(c));
  return parts.size() == 1 ? std::move(parts.front()) : Region::product(std::move(parts));
}

Region parse_union(Cursor& c) {
  std::vector<Region> parts{parse_product(c)};
  while (c.eat('+')) parts.push_back(parse_product(c));
  return parts.size() == 1 ? std::move(parts.front()) : Region::disjoint_union(std::move(parts));
}

CapacityExpr parse_cap(Cursor& c);

std::vector<CapacityExpr> cap_list(Cursor& c) {
  std::vector<CapacityExpr> out{parse_cap(c)};
  while (c.eat(',')) out.push_back(parse_cap(c));
  return out;
}

Rational rational(Cursor& c) {
  const std::string_view t = c.number_token();
  if (t.empty()) c.fail("expected a rational");
  return parse_rational(t);
}

CapacityExpr parse_cap(Cursor& c) {
  const std::string name(c.identifier());
  if (name.empty()) c.fail("expected a capacity name");
  if (name == "eh" || name == "neh") {
    c.expect(':');
    const std::int64_t k = c.integer();
    return name == "eh" ? CapacityExpr::eh(k) : CapacityExpr::normalized_eh(k);
  }
  if (name == "gromov") return CapacityExpr::gromov_radius();
  if (name == "vol") return CapacityExpr::volume();
  if (name == "cinf") return CapacityExpr::limit();
  if (name == "lagrangian") return CapacityExpr::lagrangian();
  if (auto a = parse_capacity_alias(name)) return CapacityExpr::alias(*a);
  if (name == "min" || name == "max") {
    c.expect('(');
    std::vector<CapacityExpr> args = cap_list(c);
    c.expect(')');
    return name == "min" ? CapacityExpr::min(std::move(args)) : CapacityExpr::max(std::move(args));
  }
  if (name == "scale") {
    c.expect('(');
    Rational alpha = rational(c);
    c.expect(';');
    CapacityExpr arg = parse_cap(c);
    c.expect(')');
    return CapacityExpr::scale(std::move(alpha), std::move(arg));
  }
  if (name == "amean" || name == "gmean" || name == "hmean") {
    c.expect('(');
    std::vector<Rational> w{rational(c)};
    while (c.eat(',')) w.push_back(rational(c));
    c.expect(';');
    std::vector<CapacityExpr> args = cap_list(c);
    c.expect(')');
    if (name == "amean") return CapacityExpr::arithmetic_mean(std::move(w), std::move(args));
    if (name == "gmean") return CapacityExpr::geometric_mean(std::move(w), std::move(args));
    return CapacityExpr::harmonic_mean(std::move(w), std::move(args));
  }
  c.fail("unknown capacity '" + name + "'");
}

}  // namespace

Region parse_region(std::string_view text) {
  Cursor c(text);
  try {
    Region r = parse_union(c);
    if (!c.at_end()) c.fail("trailing input");
    return r;
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid region '") + std::string(text) + "': " + e.what());
  }
}

CapacityExpr parse_capacity(std::string_view text) {
  Cursor c(text);
  try {
    CapacityExpr e = parse_cap(c);
    if (!c.at_end()) c.fail("trailing input");
    return e;
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid capacity '") + std::string(text) + "': " + e.what());
  }
}

std::string units_of(const CapacityExpr& e) {
  using Kind = CapacityExpr::Kind;
  switch (e.kind()) {
    case Kind::kEH:
    case Kind::kLagrangian:
      return "pi";
    case Kind::kAlias:
      return e.alias_kind() == CapacityAlias::kCZ ? "1" : "pi";
    case Kind::kGromovRadius:
    case Kind::kNormalizedEH:
    case Kind::kVolume:
    case Kind::kLimit:
      return "1";
    default:
      break;
  }
  std::string u;
  for (const CapacityExpr& a : e.args()) {
    const std::string v = units_of(a);
    if (u.empty()) {
      u = v;
    } else if (u != v) {
      return "mixed";
    }
  }
  return u;
}

}  // namespace symcap::cli
