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

#include "vilenkin/verify.hpp"

#include <algorithm>
#include <functional>

#include "vilenkin/error.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/parallel.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

namespace {

const std::vector<std::string> kFamilies{"constant", "cesaro:0.5", "cesaro:1", "norlund_log", "inverse_sqrt"};

std::vector<GeneratorSequence> or_default(const std::vector<GeneratorSequence>& g, std::vector<std::string> specs) {
  if (!g.empty()) return g;
  std::vector<GeneratorSequence> out;
  for (const auto& s : specs) out.push_back(GeneratorSequence::parse(s));
  return out;
}

std::vector<std::string> or_default(const std::vector<std::string>& w, const std::vector<std::string>& fallback) {
  return w.empty() ? fallback : w;
}

std::int64_t default_top(const GeneratorSequence& gen, const VerifyConfig& cfg) {
  const std::int64_t top = gen.ladder(std::min(4, gen.depth()));
  if (!cfg.r_max) return top;
  if (*cfg.r_max < 1) throw RangeError("--r-max must be >= 1");
  if (*cfg.r_max > gen.ladder(gen.depth())) throw ResolutionError("--r-max exceeds M_D for " + gen.to_string());
  return *cfg.r_max;
}

int resolution_for(const GeneratorSequence& gen, std::int64_t top) {
  int N = 0;
  while (gen.ladder(N) < top) ++N;
  return N;
}

// Runs independent jobs in parallel and concatenates their reports in job order.
std::vector<VerificationReport> run_jobs(const std::vector<std::function<std::vector<VerificationReport>()>>& jobs) {
  std::vector<std::vector<VerificationReport>> parts(jobs.size());
  parallel_for(static_cast<std::int64_t>(jobs.size()),
               [&](std::int64_t i) { parts[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)](); });
  std::vector<VerificationReport> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

std::vector<VerificationReport> closed_forms_suite(const VerifyConfig& cfg) {
  std::vector<std::function<std::vector<VerificationReport>()>> jobs;
  for (const auto& gen : or_default(cfg.generators, {"2,2,2,2", "2,3,2,3", "3,3,2"}))
    for (int N = 1; N <= gen.depth() && gen.ladder(N) <= 216; ++N)
      jobs.push_back([gen, N] { return dirichlet_closed_forms(gen, N); });
  return run_jobs(jobs);
}

std::vector<VerificationReport> lemma2_suite(const VerifyConfig& cfg) {
  std::vector<std::function<std::vector<VerificationReport>()>> jobs;
  for (const auto& gen : or_default(cfg.generators, {"2,2,2,2", "2,3,2,3", "3,3,2,3"}))
    for (const auto& spec : or_default(cfg.weights, kFamilies)) {
      const std::int64_t top = default_top(gen, cfg);
      jobs.push_back([gen, spec, top] {
        const auto q = make_weights(spec, top);
        const int N = resolution_for(gen, top);
        VerificationReport agg;
        agg.identity = "lemma2";
        agg.parameters = {{"m", gen.to_string()}, {"weights", q.label()}, {"r_max", top}, {"resolution", N}};
        agg.exact = walsh_up_to(gen, N) && q.integral();
        agg.tolerance = agg.exact ? 0.0 : 1e-9;
        agg.max_deviation = 0.0;
        std::int64_t cases = 0;
        for (int n = 0; n < gen.depth(); ++n)
          for (int s = 1; s < gen.radix(n); ++s)
            for (std::int64_t r = s * gen.ladder(n) + 1; r <= std::min(top, (s + 1) * gen.ladder(n)); ++r, ++cases) {
              auto res = lemma2_decomposition(q, gen, r, n, s, N);
              auto w = res.report.argmax_witness;
              w["r"] = r, w["n"] = n, w["s"] = s;
              agg.observe_deviation(*res.report.max_deviation, w);
            }
        agg.details["cases"] = cases;
        agg.finalize();
        return std::vector<VerificationReport>{agg};
      });
    }
  return run_jobs(jobs);
}

std::vector<VerificationReport> abel_suite(const VerifyConfig& cfg) {
  std::vector<std::function<std::vector<VerificationReport>()>> jobs;
  for (const auto& gen : or_default(cfg.generators, {"2,2,2,2", "2,3,2,3", "3,3,2,3"}))
    for (const auto& spec : or_default(cfg.weights, kFamilies)) {
      const std::int64_t top = default_top(gen, cfg);
      jobs.push_back([gen, spec, top] {
        const auto q = make_weights(spec, top);
        const int N = resolution_for(gen, top);
        const CosetLayout layout(gen, N);
        VerificationReport kernel, scalar;
        kernel.identity = "abel_kernel";
        scalar.identity = "abel_scalar";
        for (auto* r : {&kernel, &scalar}) {
          r->parameters = {{"m", gen.to_string()}, {"weights", q.label()}, {"n_max", top}, {"resolution", N}};
          r->tolerance = 1e-10;
          r->max_deviation = 0.0;
        }
        for (std::int64_t n = 1; n <= top; ++n) {
          const auto direct = norlund_kernel_sum(q, gen, n, N);
          const auto abel = norlund_kernel_abel_sum(q, gen, n, N);
          double worst = 0.0;
          std::int64_t at = 0;
          for (std::int64_t i = 0; i < direct.size(); ++i)
            if (std::abs(direct[i] - abel[i]) > worst) worst = std::abs(direct[i] - abel[i]), at = i;
          kernel.observe_deviation(worst, {{"n", n}, {"coset_index", at}, {"digits", layout.digits(at)}});
          scalar.observe_deviation(std::abs(abel_weight_sum(q, n) - q.Q(n)), {{"n", n}});
        }
        kernel.finalize();
        scalar.finalize();
        return std::vector<VerificationReport>{kernel, scalar};
      });
    }
  return run_jobs(jobs);
}

std::vector<VerificationReport> lemma3_suite(const VerifyConfig& cfg) {
  std::vector<std::function<std::vector<VerificationReport>()>> jobs;
  for (const auto& gen : or_default(cfg.generators, {"2,2,2,2,2,2"}))
    for (const auto& spec : or_default(cfg.weights, {"constant", "cesaro:0.5"})) {
      const double alpha = natural_alpha(spec, cfg.alpha);
      const std::int64_t n_max = cfg.r_max ? *cfg.r_max : gen.ladder(gen.depth());
      jobs.push_back([gen, spec, alpha, n_max] {
        const auto q = make_weights(spec, n_max);
        return std::vector<VerificationReport>{lemma3_constant(q, gen, alpha, n_max, resolution_for(gen, n_max))};
      });
    }
  return run_jobs(jobs);
}

std::vector<VerificationReport> lemma4_suite(const VerifyConfig& cfg) {
  std::vector<std::function<std::vector<VerificationReport>()>> jobs;
  for (const auto& gen : or_default(cfg.generators, {"2,2,2,2,2,2"}))
    for (const auto& spec : or_default(cfg.weights, {"constant", "cesaro:0.5"})) {
      const double alpha = natural_alpha(spec, cfg.alpha);
      for (int N = 2; N <= 3 && N < gen.depth(); ++N)
        for (std::int64_t r : {gen.ladder(N), gen.ladder(N) + 1, 2 * gen.ladder(N)})
          jobs.push_back([gen, spec, alpha, N, r] {
            const auto q = make_weights(spec, r);
            return std::vector<VerificationReport>{lemma4_integrals(q, gen, alpha, r, N)};
          });
    }
  return run_jobs(jobs);
}

std::vector<VerificationReport> remark1_suite(const VerifyConfig& cfg) {
  const std::vector<double> alphas{0.25, 0.75};
  const auto r1 = remark1_experiment(alphas, cfg.remark1_n_max);
  VerificationReport rep;
  rep.identity = "remark1";
  rep.parameters = {{"weights", "inverse_sqrt"}, {"n_max", cfg.remark1_n_max}, {"alphas", alphas}};
  rep.details = r1.to_json();
  for (const auto& row : r1.rows)
    if (!row.matches)
      rep.add_violation("alpha=" + std::to_string(row.alpha) + ": (" + std::string(to_string(row.condition_6a.verdict)) +
                        ", " + std::string(to_string(row.condition_7a.verdict)) + ")");
  rep.finalize();
  return {rep};
}

}  // namespace

const VerificationReport* SuiteResult::first_failure() const {
  for (const auto& r : reports)
    if (!r.passed) return &r;
  return nullptr;
}

nlohmann::json SuiteResult::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return {{"suite", suite}, {"passed", passed()}, {"reports", arr}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"closed-forms", "lemma2", "abel", "lemma3", "lemma4", "remark1", "all"};
  return names;
}

double natural_alpha(std::string_view weight_spec, std::optional<double> fallback) {
  if (fallback) return *fallback;
  if (weight_spec.rfind("cesaro:", 0) == 0) return std::stod(std::string(weight_spec.substr(7)));
  return 1.0;
}

SuiteResult run_suite(std::string_view name, const VerifyConfig& cfg) {
  SuiteResult out{std::string(name), {}};
  auto add = [&](std::vector<VerificationReport> v) {
    for (auto& r : v) out.reports.push_back(std::move(r));
  };
  const bool all = name == "all";
  if (all || name == "closed-forms") add(closed_forms_suite(cfg));
  if (all || name == "lemma2") add(lemma2_suite(cfg));
  if (all || name == "abel") add(abel_suite(cfg));
  if (all || name == "lemma3") add(lemma3_suite(cfg));
  if (all || name == "lemma4") add(lemma4_suite(cfg));
  if (all || name == "remark1") add(remark1_suite(cfg));
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw RangeError("unknown suite '" + std::string(name) + "'");
  return out;
}

}  // namespace vilenkin
