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

// Norlund weight sequences q_0, q_1, ... with prefix sums Q_n = q_0 + ... + q_{n-1},
// and desk-scale probes of the growth conditions
//   (6a)  n^alpha / Q_n = O(1),
//   (7a)  (q_n - q_{n+1}) / n^(alpha-2) = O(1).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace vilenkin {

enum class WeightKind { constant, cesaro, norlund_log, riesz_log, inverse_sqrt, custom };

std::string_view to_string(WeightKind kind);

class WeightSequence {
 public:
  // Values q_0..q_{n_max}. `label` is echoed in reports.
  static WeightSequence custom(std::vector<double> values, std::string label = "custom");

  WeightKind kind() const noexcept { return kind_; }
  // Cesaro order (only meaningful for WeightKind::cesaro).
  double alpha() const noexcept { return alpha_; }
  const std::string& label() const noexcept { return label_; }

  // Highest stored index.
  std::int64_t n_max() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }
  double q(std::int64_t k) const;
  // Q_n for 0 <= n <= n_max + 1.
  double Q(std::int64_t n) const;
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> prefix_sums() const noexcept { return prefix_; }

  // q_k >= q_{k+1} for all k >= 1, and q_0 >= q_1 unless q_0 == 0.
  bool non_increasing() const noexcept { return non_increasing_; }
  // Riesz logarithmic weights attach 1/k to S_k and are not a Norlund method.
  bool is_norlund() const noexcept { return kind_ != WeightKind::riesz_log; }
  // Every q_k is an integer, so Q_n F_n can be formed in integer arithmetic.
  bool integral() const noexcept { return integral_; }

 private:
  friend WeightSequence make_weights(std::string_view spec, std::int64_t n_max);
  WeightSequence(WeightKind kind, double alpha, std::string label, std::vector<double> values);

  WeightKind kind_;
  double alpha_;
  std::string label_;
  std::vector<double> values_;
  std::vector<double> prefix_;
  bool non_increasing_ = true;
  bool integral_ = true;
};

// Grammar: constant | cesaro:<alpha> | norlund_log | riesz_log | inverse_sqrt | file:<path>
// (file: one q per line, at least n_max + 1 lines are used).
WeightSequence make_weights(std::string_view spec, std::int64_t n_max);

// A_k^beta by A_0 = 1, A_k = A_{k-1} (beta + k) / k.
std::vector<double> cesaro_numbers(double beta, std::int64_t n_max);

struct RegularityReport {
  // (n, q_{n-1} / Q_n) at n = 2, 4, 8, ... <= n_max.
  std::vector<std::pair<std::int64_t, double>> samples;
  // Ratios between successive samples over the top three samples.
  std::vector<double> decay;
  bool regular = false;
  nlohmann::json to_json() const;
};

struct RegularityConfig {
  // Regular when every one of the top three sample-to-sample factors is
  // at most this value (power-law decay), or the last sample is tiny.
  double max_decay_factor = 0.9;
  double negligible = 1e-6;
};

RegularityReport check_regularity(const WeightSequence& q, std::int64_t n_max, RegularityConfig cfg = {});

enum class Verdict { satisfied, violated, inconclusive };
std::string_view to_string(Verdict v);

// Desk-scale stand-in for O(1): sups over the dyadic blocks [2^j, 2^{j+1}).
struct TrendConfig {
  // "violated" when each of the last `top_blocks` block-to-block factors is >= this.
  double growth_factor = 1.1;
  // "satisfied" when the top sups stop increasing or every factor is at most
  // this value (bounded monotone limits approach 1 from above).
  double bounded_factor = 1.01;
  int top_blocks = 3;
};

struct BlockSup {
  std::int64_t first;
  std::int64_t last;
  double sup;
  std::int64_t argmax;
};

struct ConditionReport {
  std::string condition;  // "6a" or "7a"
  double alpha = 0.0;
  std::int64_t n_max = 0;
  double global_sup = 0.0;
  std::int64_t argmax = 0;
  std::vector<BlockSup> blocks;
  // Block-to-block factors across the top blocks (oldest first).
  std::vector<double> growth;
  // Indices skipped because the ratio is undefined (Q_n = 0).
  std::int64_t skipped = 0;
  Verdict verdict = Verdict::inconclusive;
  nlohmann::json to_json() const;
};

// n^alpha / Q_n for 1 <= n <= n_max. Requires n_max >= 16.
ConditionReport check_6a(const WeightSequence& q, double alpha, std::int64_t n_max, TrendConfig cfg = {});
// (q_n - q_{n+1}) / n^(alpha-2) for 1 <= n <= n_max. Requires q.n_max() > n_max.
ConditionReport check_7a(const WeightSequence& q, double alpha, std::int64_t n_max, TrendConfig cfg = {});

struct Remark1Row {
  double alpha;
  ConditionReport condition_6a;
  ConditionReport condition_7a;
  // Pattern for q_n = 1/sqrt(n): alpha < 1/2 -> (satisfied, violated),
  // alpha > 1/2 -> (violated, satisfied), none at the boundary.
  std::optional<std::pair<Verdict, Verdict>> expected;
  bool matches = true;
};

struct Remark1Report {
  std::int64_t n_max = 0;
  std::vector<Remark1Row> rows;
  bool matches = true;
  nlohmann::json to_json() const;
};

Remark1Report remark1_experiment(std::span<const double> alphas, std::int64_t n_max, TrendConfig cfg = {});

}  // namespace vilenkin
