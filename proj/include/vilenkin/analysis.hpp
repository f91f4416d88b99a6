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

// Summability means of step functions, quasi-norms, the martingale maximal
// function, p-atoms, weighted maximal operators and strong-convergence sums.
//
// All logarithms are base 2.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "vilenkin/core.hpp"
#include "vilenkin/report.hpp"
#include "vilenkin/step_function.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

// ---- Means --------------------------------------------------------------

enum class MeanPath {
  spectral,      // multiplier Q_{n-j} / Q_n on the spectrum
  partial_sums,  // (1/Q_n) sum q_{n-k} S_k f, with S_k f = f for k >= M_N
  convolution,   // f * F_n summed from the definition
};

// t_n f for Norlund weights. Requires Q_n > 0 and q stored up to n - 1.
StepFunction norlund_mean(const WeightSequence& q, std::int64_t n, const StepFunction& f,
                          MeanPath path = MeanPath::spectral);

enum class ClassicalMean { fejer, cesaro, riesz_log, norlund_log };

// Normalizer of the Cesaro mean: A_{n-1}^alpha makes sigma^1 = sigma; `displayed`
// divides by A_n^alpha instead.
enum class CesaroNormalization { standard, displayed };

// sigma_n, sigma_n^alpha, R_n, L_n computed from the partial sums.
// R_n and L_n need n >= 2.
StepFunction classical_mean(ClassicalMean kind, std::int64_t n, const StepFunction& f, double alpha = 1.0,
                            CesaroNormalization norm = CesaroNormalization::standard);

// t_n f for any weight sequence: riesz_log weights go through R_n, everything
// else through norlund_mean.
StepFunction summability_mean(const WeightSequence& q, std::int64_t n, const StepFunction& f);

// ---- Norms ----------------------------------------------------------------

// int |f|^p and its 1/p-th power.
double lp_integral(const StepFunction& f, double p);
double lp_quasinorm(const StepFunction& f, double p);
// sup_l l^p mu(|f| >= l) (attained at a value of |f|) and its 1/p-th power.
double weak_lp_integral(const StepFunction& f, double p);
double weak_lp(const StepFunction& f, double p);
// f* = max_{0<=n<=N} |E_n f|, E_n the average over rank-n cosets.
RealStepFunction martingale_maximal(const StepFunction& f);
double hardy_integral(const StepFunction& f, double p);
double hardy_norm(const StepFunction& f, double p);

// ---- Atoms ----------------------------------------------------------------

enum class AtomProfile { haar, random };

struct Atom {
  double p;
  Coset support;
  StepFunction function;
  std::uint64_t seed = 0;
};

// Atom supported on I_N(0), evaluated at resolution N + sub_depth.
// haar: +c on the first rank-(N+1) sub-coset of I_N, -c on the second.
// random: uniform integers on the rank-(N + sub_depth) sub-cosets, mean removed
// exactly, scaled so that sup |a| = c. Here c = M_N^{1/p}.
Atom make_atom(const GeneratorSequence& gen, double p, int N, AtomProfile profile, std::uint64_t seed = 0,
               int sub_depth = 1);

// Mean zero (1e-12), sup bound and support.
VerificationReport check_atom(const Atom& atom);

// ---- Weighted maximal operators -------------------------------------------

struct MaximalConfig {
  std::int64_t n_max = 1;
  double alpha = 1.0;
  // Sweep starts here; the theorem experiment skips n <= M_N.
  std::int64_t n_min = 1;
};

struct MaximalResult {
  RealStepFunction weighted;    // max |t_n f| / log^{1+alpha}(n+1)
  RealStepFunction unweighted;  // max |t_n f|
  std::vector<std::int64_t> argmax;  // per coset, for the weighted operator
};

MaximalResult weighted_maximal(const WeightSequence& q, const StepFunction& f, const MaximalConfig& cfg);

// ---- Atom experiment -------------------------------------------------------

struct Theorem1Config {
  GeneratorSequence generator = GeneratorSequence::walsh(6);
  std::vector<int> levels{1, 2, 3};
  std::vector<std::int64_t> n_max_factors{2, 4, 8};  // n_max = factor * M_N
  int atoms = 20;
  std::uint64_t seed = 1;
  double p = 0.5;
  AtomProfile profile = AtomProfile::random;
  int sub_depth = 1;
};

struct Theorem1Row {
  int N;
  std::int64_t n_max;
  std::uint64_t atom_seed;
  double value;
};

struct Theorem1Report {
  std::string family;
  double alpha = 0.0;
  double p = 0.0;
  std::vector<Theorem1Row> table;
  // max over atoms, keyed by (N, n_max) in table order.
  std::vector<Theorem1Row> maxima;
  double max_value = 0.0;
  std::vector<std::string> warnings;
  nlohmann::json to_json() const;
};

// Atom seeds for level N: draws of SplitMix64(seed + N).
std::vector<std::uint64_t> atom_seeds(std::uint64_t seed, int N, int count);

// E(a) = int over the complement of I_N of |t~* a|^{1/(1+alpha)}, sup over M_N < n <= n_max,
// summed over the complement decomposition of I_N.
double atom_integral(const WeightSequence& q, double alpha, const Atom& atom, std::int64_t n_max);

Theorem1Report theorem1_experiment(const WeightSequence& q, double alpha, const Theorem1Config& cfg);

// ---- Strong summation ----------------------------------------------------

struct StrongSum {
  std::int64_t n;
  double value;        // (1/log n) sum_{k<=n} ||t_k f||_p^p / k,  p = 1/(1+alpha)
  double hardy_value;  // same with the H_p quasi-norm of t_k f
  double hardy_f;      // ||f||_{H_p}^p
  double ratio;        // value / hardy_f
  std::int64_t skipped;  // k with Q_k = 0
};

// One entry per requested n (each >= 2), computed in a single sweep.
std::vector<StrongSum> strong_sum_sequence(const WeightSequence& q, double alpha, const StepFunction& f,
                                           const std::vector<std::int64_t>& ns);
StrongSum strong_sum(const WeightSequence& q, double alpha, const StepFunction& f, std::int64_t n);

struct BackgroundSums {
  std::int64_t n;
  double simon;   // (1/log^{[p]} n) sum ||S_k f||_p^p / k^{2-p}
  double fejer;   // (1/log^{[1/2+p]} n) sum ||sigma_k f||_p^p / k^{2-2p}
  double gat;     // (1/log n) sum ||S_k f - f||_1 / k
};

// One entry per n = 2..n_max.
std::vector<BackgroundSums> background_sums(const StepFunction& f, double p, std::int64_t n_max);

}  // namespace vilenkin
