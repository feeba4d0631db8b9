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

#ifndef SYMCAP_REPORT_HPP_
#define SYMCAP_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace symcap {

// Pass/fail record of a checker run. Every case is logged in order; failing
// cases also land in `failures` together with their witness data.
class VerificationReport {
 public:
  VerificationReport(std::string checker, nlohmann::json params);

  void record(const std::string& label, bool ok, nlohmann::json witness = nlohmann::json::object());
  void note(const std::string& text) { notes_.push_back(text); }
  void merge(const VerificationReport& other);

  const std::string& checker() const { return checker_; }
  std::size_t case_count() const { return cases_.size(); }
  std::size_t failure_count() const { return failures_.size(); }
  const std::vector<nlohmann::json>& failures() const { return failures_; }
  bool passed() const { return failures_.empty(); }

  // {checker, params, cases, failures, verdict[, notes]}
  nlohmann::json to_json() const;

 private:
  std::string checker_;
  nlohmann::json params_;
  std::vector<nlohmann::json> cases_;
  std::vector<nlohmann::json> failures_;
  std::vector<std::string> notes_;
};

}  // namespace symcap

#endif  // SYMCAP_REPORT_HPP_
