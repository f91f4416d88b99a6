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

// Named verification suites over parameter grids.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vilenkin/core.hpp"
#include "vilenkin/report.hpp"

namespace vilenkin {

struct VerifyConfig {
  // Empty lists select each suite's default grid.
  std::vector<GeneratorSequence> generators;
  std::vector<std::string> weights;
  // Largest kernel index (lemma2: r, abel: n). Defaults to min(M_4, M_D).
  std::optional<std::int64_t> r_max;
  // Exponent for lemma3/lemma4; defaults to 1 for constant weights and to
  // the order for cesaro:<a>.
  std::optional<double> alpha;
  std::int64_t remark1_n_max = std::int64_t{1} << 16;
};

struct SuiteResult {
  std::string suite;
  std::vector<VerificationReport> reports;

  bool passed() const { return all_passed(reports); }
  const VerificationReport* first_failure() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Throws RangeError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyConfig& cfg = {});

// Default exponent paired with a weight spec.
double natural_alpha(std::string_view weight_spec, std::optional<double> fallback = std::nullopt);

}  // namespace vilenkin
