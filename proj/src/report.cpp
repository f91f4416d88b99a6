// Copyright 2026 The vilenkin Authors
//
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

#include "vilenkin/report.hpp"

#include <algorithm>
#include <cmath>

namespace vilenkin {

void VerificationReport::observe_deviation(double deviation, const nlohmann::json& witness) {
  if (!max_deviation || deviation > *max_deviation || std::isnan(deviation)) {
    max_deviation = deviation;
    argmax_witness = witness;
  }
}

void VerificationReport::observe_ratio(double ratio, const nlohmann::json& witness) {
  if (!empirical_constant || ratio > *empirical_constant || std::isnan(ratio)) {
    empirical_constant = ratio;
    argmax_witness = witness;
  }
}

void VerificationReport::add_violation(std::string what) { violations.push_back(std::move(what)); }

void VerificationReport::finalize() {
  passed = violations.empty();
  if (max_deviation) {
    const double d = *max_deviation;
    passed = passed && !std::isnan(d) && (exact ? d == 0.0 : d <= tolerance);
  }
  if (empirical_constant) passed = passed && std::isfinite(*empirical_constant);
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["parameters"] = parameters;
  if (max_deviation) j["max_deviation"] = *max_deviation;
  if (empirical_constant) j["empirical_constant"] = *empirical_constant;
  j["argmax_witness"] = argmax_witness;
  j["exact"] = exact;
  j["tolerance"] = tolerance;
  j["passed"] = passed;
  j["violations"] = violations;
  if (!details.empty()) j["details"] = details;
  return j;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

}  // namespace vilenkin
