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

#ifndef SYMCAP_ERRORS_HPP_
#define SYMCAP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace symcap {

// Argument outside the domain of a function, e.g. a in (0,1] violated or a
// partial function evaluated outside its validity interval.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested quantity is not defined (or not implemented exactly) for the
// given region or value shape.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (region grammar, capacity grammar, files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value that depends on a conjectural formula was used where a certified
// inequality is required.
class ConjecturalTaintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input provably does not come from a (damaged) ellipsoid spectrum.
class MalformedSpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive reconstruction hit its prefix cap before succeeding.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symcap

#endif  // SYMCAP_ERRORS_HPP_
