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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace vilenkin {

// Outcome of one identity check or one empirical-constant sweep.
//
// Identity checks fill max_deviation; bound sweeps fill empirical_constant.
// Bound sweeps never pass or fail on the value of the constant itself, only
// on its finiteness pattern (violations).
struct VerificationReport {
  std::string identity;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<double> max_deviation;
  std::optional<double> empirical_constant;
  nlohmann::json argmax_witness = nlohmann::json::object();
  bool exact = false;
  double tolerance = 0.0;
  bool passed = true;
  std::vector<std::string> violations;
  nlohmann::json details = nlohmann::json::object();

  // Records a deviation and keeps the largest one with its witness.
  void observe_deviation(double deviation, const nlohmann::json& witness);
  // Records a ratio and keeps the largest one with its witness.
  void observe_ratio(double ratio, const nlohmann::json& witness);
  void add_violation(std::string what);
  // passed = no violations and (for identities) max_deviation <= tolerance.
  void finalize();

  nlohmann::json to_json() const;
};

bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace vilenkin
