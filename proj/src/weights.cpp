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

#include "vilenkin/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "vilenkin/error.hpp"

namespace vilenkin {

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::constant: return "constant";
    case WeightKind::cesaro: return "cesaro";
    case WeightKind::norlund_log: return "norlund_log";
    case WeightKind::riesz_log: return "riesz_log";
    case WeightKind::inverse_sqrt: return "inverse_sqrt";
    case WeightKind::custom: return "custom";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

WeightSequence::WeightSequence(WeightKind kind, double alpha, std::string label, std::vector<double> values)
    : kind_(kind), alpha_(alpha), label_(std::move(label)), values_(std::move(values)) {
  if (values_.empty()) throw RangeError("weight sequence needs at least q_0");
  prefix_.assign(values_.size() + 1, 0.0);
  // Neumaier-compensated running sum.
  double sum = 0.0, carry = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!(v >= 0.0) || !std::isfinite(v)) throw ContractError("weights must be finite and non-negative");
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
    prefix_[k + 1] = sum + carry;
    integral_ = integral_ && v == std::floor(v) && v < 0x1.0p52;
  }
  for (std::size_t k = 0; k + 1 < values_.size(); ++k) {
    if (k == 0 && values_[0] == 0.0) continue;
    if (values_[k] < values_[k + 1]) {
      non_increasing_ = false;
      break;
    }
  }
}

WeightSequence WeightSequence::custom(std::vector<double> values, std::string label) {
  return WeightSequence(WeightKind::custom, 0.0, std::move(label), std::move(values));
}

double WeightSequence::q(std::int64_t k) const {
  if (k < 0 || k > n_max())
    throw RangeError("q_" + std::to_string(k) + " beyond the " + label_ + " weights (n_max " + std::to_string(n_max()) + ")");
  return values_[static_cast<std::size_t>(k)];
}

double WeightSequence::Q(std::int64_t n) const {
  if (n < 0 || n > n_max() + 1)
    throw RangeError("Q_" + std::to_string(n) + " beyond the " + label_ + " weights (n_max " + std::to_string(n_max()) + ")");
  return prefix_[static_cast<std::size_t>(n)];
}

std::vector<double> cesaro_numbers(double beta, std::int64_t n_max) {
  if (n_max < 0) throw RangeError("n_max must be >= 0");
  std::vector<double> a(static_cast<std::size_t>(n_max) + 1);
  a[0] = 1.0;
  for (std::int64_t k = 1; k <= n_max; ++k)
    a[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k - 1)] * (beta + static_cast<double>(k)) / static_cast<double>(k);
  return a;
}

namespace {

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

std::vector<double> read_weight_file(const std::string& path, std::int64_t n_max) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weight file '" + path + "'");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    values.push_back(parse_double(line, "weight"));
  }
  if (static_cast<std::int64_t>(values.size()) < n_max + 1)
    throw RangeError("weight file '" + path + "' has " + std::to_string(values.size()) + " values, need " +
                     std::to_string(n_max + 1));
  values.resize(static_cast<std::size_t>(n_max) + 1);
  return values;
}

}  // namespace

WeightSequence make_weights(std::string_view spec, std::int64_t n_max) {
  if (n_max < 0) throw RangeError("n_max must be >= 0");
  const auto size = static_cast<std::size_t>(n_max) + 1;
  const std::string label(spec);
  if (spec == "constant") return WeightSequence(WeightKind::constant, 1.0, label, std::vector<double>(size, 1.0));
  if (spec == "norlund_log" || spec == "riesz_log") {
    std::vector<double> v(size, 0.0);
    for (std::size_t k = 1; k < size; ++k) v[k] = 1.0 / static_cast<double>(k);
    return WeightSequence(spec == "norlund_log" ? WeightKind::norlund_log : WeightKind::riesz_log, 0.0, label, std::move(v));
  }
  if (spec == "inverse_sqrt") {
    std::vector<double> v(size, 0.0);
    for (std::size_t k = 1; k < size; ++k) v[k] = 1.0 / std::sqrt(static_cast<double>(k));
    return WeightSequence(WeightKind::inverse_sqrt, 0.0, label, std::move(v));
  }
  if (spec.starts_with("cesaro:")) {
    const double alpha = parse_double(spec.substr(7), "cesaro order");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw RangeError("cesaro order must lie in (0, 1]");
    return WeightSequence(WeightKind::cesaro, alpha, label, cesaro_numbers(alpha - 1.0, n_max));
  }
  if (spec.starts_with("file:"))
    return WeightSequence(WeightKind::custom, 0.0, label, read_weight_file(std::string(spec.substr(5)), n_max));
  throw ParseError("unknown weight spec '" + label + "'");
}

// ---------------------------------------------------------------------------

nlohmann::json RegularityReport::to_json() const {
  nlohmann::json j;
  j["samples"] = nlohmann::json::array();
  for (const auto& [n, r] : samples) j["samples"].push_back({{"n", n}, {"ratio", r}});
  j["decay"] = decay;
  j["regular"] = regular;
  return j;
}

RegularityReport check_regularity(const WeightSequence& q, std::int64_t n_max, RegularityConfig cfg) {
  if (n_max < 8) throw RangeError("regularity check needs n_max >= 8");
  if (q.Q(std::min(n_max, q.n_max() + 1)) <= 0.0) throw DegenerateWeightsError("all weights vanish");
  RegularityReport out;
  for (std::int64_t n = 2; n <= n_max; n *= 2) {
    const double Qn = q.Q(n);
    if (Qn > 0.0) out.samples.emplace_back(n, q.q(n - 1) / Qn);
  }
  const std::size_t s = out.samples.size();
  if (s < 4) return out;
  bool decays = true;
  for (std::size_t i = s - 3; i < s; ++i) {
    const double prev = out.samples[i - 1].second;
    const double factor = prev > 0.0 ? out.samples[i].second / prev : 0.0;
    out.decay.push_back(factor);
    decays = decays && factor <= cfg.max_decay_factor;
  }
  out.regular = decays || out.samples.back().second <= cfg.negligible;
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json ConditionReport::to_json() const {
  nlohmann::json j;
  j["condition"] = condition;
  j["alpha"] = alpha;
  j["n_max"] = n_max;
  j["global_sup"] = global_sup;
  j["argmax"] = argmax;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : blocks) j["blocks"].push_back({{"first", b.first}, {"last", b.last}, {"sup", b.sup}, {"argmax", b.argmax}});
  j["growth"] = growth;
  j["skipped"] = skipped;
  j["verdict"] = std::string(to_string(verdict));
  return j;
}

namespace {

template <class Ratio>
ConditionReport dyadic_trend(std::string condition, double alpha, std::int64_t n_max, TrendConfig cfg, Ratio&& ratio) {
  if (n_max < 16) throw RangeError("condition checks need n_max >= 16");
  ConditionReport out;
  out.condition = std::move(condition);
  out.alpha = alpha;
  out.n_max = n_max;
  out.global_sup = -std::numeric_limits<double>::infinity();
  for (std::int64_t first = 1; 2 * first - 1 <= n_max; first *= 2) {
    BlockSup block{first, 2 * first - 1, -std::numeric_limits<double>::infinity(), 0};
    for (std::int64_t n = block.first; n <= block.last; ++n) {
      const std::optional<double> r = ratio(n);
      if (!r) {
        ++out.skipped;
        continue;
      }
      if (*r > block.sup) {
        block.sup = *r;
        block.argmax = n;
      }
    }
    if (block.sup > out.global_sup) {
      out.global_sup = block.sup;
      out.argmax = block.argmax;
    }
    out.blocks.push_back(block);
  }
  const int top = cfg.top_blocks;
  const auto count = static_cast<int>(out.blocks.size());
  if (count < top + 1) return out;
  bool all_grow = true, strictly_increasing = true, flat = true;
  for (int i = count - top; i < count; ++i) {
    const double prev = out.blocks[static_cast<std::size_t>(i - 1)].sup;
    const double cur = out.blocks[static_cast<std::size_t>(i)].sup;
    const double factor = prev > 0.0 ? cur / prev : (cur > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    out.growth.push_back(factor);
    all_grow = all_grow && factor >= cfg.growth_factor;
    strictly_increasing = strictly_increasing && cur > prev;
    flat = flat && factor <= cfg.bounded_factor;
  }
  if (all_grow)
    out.verdict = Verdict::violated;
  else if (!strictly_increasing || flat)
    out.verdict = Verdict::satisfied;
  else
    out.verdict = Verdict::inconclusive;
  return out;
}

}  // namespace

ConditionReport check_6a(const WeightSequence& q, double alpha, std::int64_t n_max, TrendConfig cfg) {
  if (q.n_max() + 1 < n_max) throw RangeError("weights too short for the (6a) sweep");
  return dyadic_trend("6a", alpha, n_max, cfg, [&](std::int64_t n) -> std::optional<double> {
    const double Qn = q.Q(n);
    if (Qn <= 0.0) return std::nullopt;
    return std::pow(static_cast<double>(n), alpha) / Qn;
  });
}

ConditionReport check_7a(const WeightSequence& q, double alpha, std::int64_t n_max, TrendConfig cfg) {
  if (q.n_max() < n_max + 1) throw RangeError("weights too short for the (7a) sweep (need q_{n_max+1})");
  return dyadic_trend("7a", alpha, n_max, cfg, [&](std::int64_t n) -> std::optional<double> {
    return (q.q(n) - q.q(n + 1)) / std::pow(static_cast<double>(n), alpha - 2.0);
  });
}

nlohmann::json Remark1Report::to_json() const {
  nlohmann::json j;
  j["n_max"] = n_max;
  j["matches"] = matches;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["alpha"] = r.alpha;
    row["6a"] = r.condition_6a.to_json();
    row["7a"] = r.condition_7a.to_json();
    if (r.expected)
      row["expected"] = {std::string(to_string(r.expected->first)), std::string(to_string(r.expected->second))};
    else
      row["expected"] = nullptr;
    row["matches"] = r.matches;
    j["rows"].push_back(row);
  }
  return j;
}

Remark1Report remark1_experiment(std::span<const double> alphas, std::int64_t n_max, TrendConfig cfg) {
  const auto q = make_weights("inverse_sqrt", n_max + 1);
  Remark1Report out;
  out.n_max = n_max;
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw RangeError("the inverse_sqrt condition probe takes alpha in (0, 1)");
    Remark1Row row{alpha, check_6a(q, alpha, n_max, cfg), check_7a(q, alpha, n_max, cfg), std::nullopt, true};
    if (alpha < 0.5)
      row.expected = std::pair{Verdict::satisfied, Verdict::violated};
    else if (alpha > 0.5)
      row.expected = std::pair{Verdict::violated, Verdict::satisfied};
    if (row.expected)
      row.matches = row.condition_6a.verdict == row.expected->first && row.condition_7a.verdict == row.expected->second;
    out.matches = out.matches && row.matches;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace vilenkin
