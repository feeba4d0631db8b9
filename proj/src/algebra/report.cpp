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

#include "symcap/report.hpp"

namespace symcap {

VerificationReport::VerificationReport(std::string checker, nlohmann::json params)
    : checker_(std::move(checker)), params_(std::move(params)) {}

void VerificationReport::record(const std::string& label, bool ok, nlohmann::json witness) {
  cases_.push_back({{"case", label}, {"pass", ok}});
  if (!ok) {
    witness["case"] = label;
    failures_.push_back(std::move(witness));
  }
}

void VerificationReport::merge(const VerificationReport& other) {
  cases_.insert(cases_.end(), other.cases_.begin(), other.cases_.end());
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["checker"] = checker_;
  j["params"] = params_;
  j["cases"] = cases_;
  j["failures"] = failures_;
  j["verdict"] = passed() ? "pass" : "fail";
  if (!notes_.empty()) j["notes"] = notes_;
  return j;
}

}  // namespace symcap
