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

// Dirichlet, Fejer and Norlund kernels
//
//   D_n = sum_{k<n} psi_k,   K_n = (1/n) sum_{k=1}^n D_k,
//   F_n = (1/Q_n) sum_{k=1}^n q_{n-k} D_k,
//
// each with more than one evaluation route (direct character sums, closed
// forms, Abel-transformed sums, spectral multipliers) so the routes can be
// checked against each other.

#include <cstdint>
#include <type_traits>
#include <vector>

#include "vilenkin/characters.hpp"
#include "vilenkin/core.hpp"
#include "vilenkin/report.hpp"
#include "vilenkin/step_function.hpp"
#include "vilenkin/weights.hpp"

namespace vilenkin {

// Default evaluation resolution for index n: order(n) + 1, capped at D when n <= M_D.
int kernel_resolution(const GeneratorSequence& gen, std::int64_t n);

// True when every radix below `resolution` is 2 (integer arithmetic applies).
bool walsh_up_to(const GeneratorSequence& gen, int resolution);

template <class T>
BasicStepFunction<T> basic_character(const GeneratorSequence& gen, std::int64_t n, int resolution) {
  if constexpr (std::is_integral_v<T>)
    return walsh_character_function(gen, n, resolution);
  else
    return character_function(gen, n, resolution);
}

template <class T>
T conj_value(const T& v) {
  if constexpr (std::is_same_v<T, Complex>)
    return std::conj(v);
  else
    return v;
}

// psi_k, D_k and k*K_k at one resolution, built incrementally.
template <class T>
class BasicKernelTable {
 public:
  BasicKernelTable(GeneratorSequence gen, std::int64_t n_max, int resolution)
      : gen_(std::move(gen)), n_max_(n_max), resolution_(resolution) {
    if (n_max_ < 0) throw RangeError("kernel table needs n_max >= 0");
    if (resolution_ < 0 || resolution_ > gen_.depth()) throw ResolutionError("resolution outside [0, depth]");
    if (n_max_ > gen_.ladder(resolution_))
      throw ResolutionError("kernels up to " + std::to_string(n_max_) + " are not resolution-" + std::to_string(resolution_));
    const std::int64_t chars = std::min(n_max_, gen_.ladder(resolution_) - 1);
    characters_.reserve(static_cast<std::size_t>(chars) + 1);
    for (std::int64_t k = 0; k <= chars; ++k) characters_.push_back(basic_character<T>(gen_, k, resolution_));
    dirichlet_.push_back(BasicStepFunction<T>::zeros(gen_, resolution_));
    fejer_sum_.push_back(BasicStepFunction<T>::zeros(gen_, resolution_));
    for (std::int64_t k = 1; k <= n_max_; ++k) {
      dirichlet_.push_back(dirichlet_.back() + characters_[static_cast<std::size_t>(k - 1)]);
      fejer_sum_.push_back(fejer_sum_.back() + dirichlet_.back());
    }
  }

  const GeneratorSequence& generator() const noexcept { return gen_; }
  std::int64_t n_max() const noexcept { return n_max_; }
  int resolution() const noexcept { return resolution_; }

  const BasicStepFunction<T>& character(std::int64_t k) const { return characters_.at(static_cast<std::size_t>(k)); }
  // D_k, 0 <= k <= n_max.
  const BasicStepFunction<T>& dirichlet(std::int64_t k) const { return dirichlet_.at(static_cast<std::size_t>(k)); }
  // k * K_k = D_1 + ... + D_k.
  const BasicStepFunction<T>& fejer_sum(std::int64_t k) const { return fejer_sum_.at(static_cast<std::size_t>(k)); }

  // sum_{k=1}^n w(n-k) D_k where w(i) = weight i.
  template <class Weight>
  BasicStepFunction<T> norlund_sum(std::int64_t n, Weight&& w) const {
    auto out = BasicStepFunction<T>::zeros(gen_, resolution_);
    for (std::int64_t k = 1; k <= n; ++k) {
      const T c = w(n - k);
      const auto& d = dirichlet(k);
      for (std::int64_t i = 0; i < out.size(); ++i) out[i] += c * d[i];
    }
    return out;
  }

 private:
  GeneratorSequence gen_;
  std::int64_t n_max_;
  int resolution_;
  std::vector<BasicStepFunction<T>> characters_;
  std::vector<BasicStepFunction<T>> dirichlet_;
  std::vector<BasicStepFunction<T>> fejer_sum_;
};

using KernelTable = BasicKernelTable<Complex>;
using ExactKernelTable = BasicKernelTable<std::int64_t>;

// ---- Dirichlet kernels ----------------------------------------------------

// D_n by direct character summation; D_0 = 0. Requires n <= M_N.
StepFunction dirichlet(const GeneratorSequence& gen, std::int64_t n, int resolution);
ExactStepFunction dirichlet_exact(const GeneratorSequence& gen, std::int64_t n, int resolution);

// D_{M_n} = M_n 1_{I_n}.
template <class T>
BasicStepFunction<T> dirichlet_ladder_form(const GeneratorSequence& gen, int n, int resolution) {
  if (n < 0 || n > resolution) throw ResolutionError("D_{M_n} needs n <= resolution");
  return BasicStepFunction<T>::indicator(Coset(n, GroupElement::zero(gen)), resolution, static_cast<T>(gen.ladder(n)));
}

// D_{s M_n} = D_{M_n} * sum_{k<s} r_n^k.
template <class T>
BasicStepFunction<T> dirichlet_multiple_form(const GeneratorSequence& gen, int s, int n, int resolution) {
  if (n < 0 || n >= resolution) throw ResolutionError("D_{s M_n} needs n < resolution");
  if (s < 1 || s >= gen.radix(n)) throw RangeError("D_{s M_n} needs 1 <= s < m_n");
  auto out = dirichlet_ladder_form<T>(gen, n, resolution);
  const CosetLayout layout(gen, resolution);
  for (std::int64_t i = 0; i < out.size(); ++i) {
    T acc{};
    if constexpr (std::is_integral_v<T>) {
      const int xn = layout.digit(i, n);
      for (int k = 0; k < s; ++k) acc += ((k * xn) % 2) ? -1 : 1;
    } else {
      const Complex r = rademacher(n, layout.element(i));
      Complex power{1.0, 0.0};
      for (int k = 0; k < s; ++k, power *= r) acc += power;
    }
    out[i] *= acc;
  }
  return out;
}

// D_{s M_n - j} = D_{s M_n} - psi_{s M_n - 1} conj(D_j), 1 <= j <= M_n - 1,
// with D_{s M_n} taken from its closed form.
template <class T>
BasicStepFunction<T> dirichlet_reflected_form(const GeneratorSequence& gen, int s, int n, std::int64_t j, int resolution) {
  if (j < 1 || j > gen.ladder(n) - 1) throw RangeError("reflection needs 1 <= j <= M_n - 1");
  auto out = dirichlet_multiple_form<T>(gen, s, n, resolution);
  const auto psi = basic_character<T>(gen, s * gen.ladder(n) - 1, resolution);
  auto dj = BasicStepFunction<T>::zeros(gen, resolution);
  for (std::int64_t k = 0; k < j; ++k) dj += basic_character<T>(gen, k, resolution);
  for (std::int64_t i = 0; i < out.size(); ++i) out[i] -= psi[i] * conj_value(dj[i]);
  return out;
}

// All closed-form Dirichlet identities at this resolution, one report per
// identity. Exact in Walsh mode, tolerance 1e-9 otherwise.
std::vector<VerificationReport> dirichlet_closed_forms(const GeneratorSequence& gen, int resolution);

// ---- Fejer kernels ----------------------------------------------------------

// K_n = (1/n) sum_{k=1}^n D_k. Requires 1 <= n <= M_N.
StepFunction fejer(const GeneratorSequence& gen, std::int64_t n, int resolution);

enum class FejerBranch { zero, geometric, center };

// Which case of the closed form of K_{M_n} applies at the coset with these digits.
// `t` receives the lowest nonzero digit for the first two cases.
FejerBranch fejer_branch(std::span<const int> digits, int n, int* t = nullptr);

// K_{M_n}: 0 if x - x_t e_t not in I_n; M_t / (1 - r_t(x)) if it is; (M_n + 1)/2 on I_n
// (x in I_t \ I_{t+1}).
StepFunction fejer_ladder_form(const GeneratorSequence& gen, int n, int resolution);

// Branch-classified comparison of the closed form of K_{M_n} with direct summation.
VerificationReport fejer_closed_form_check(const GeneratorSequence& gen, int n, int resolution);

// ---- Norlund kernels --------------------------------------------------------

// Q_n F_n = sum_{k=1}^n q_{n-k} D_k (defined even when Q_n = 0).
StepFunction norlund_kernel_sum(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n, int resolution);
// F_n by direct weighted summation. Throws DegenerateWeightsError when Q_n = 0.
StepFunction norlund_kernel(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n, int resolution);

// Q_n F_n = sum_{j=1}^{n-1} (q_{n-j} - q_{n-j-1}) j K_j + q_0 n K_n.
StepFunction norlund_kernel_abel_sum(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n, int resolution);
StepFunction norlund_kernel_abel(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n, int resolution);
// sum_{j=1}^{n-1} (q_{n-j} - q_{n-j-1}) j + q_0 n, which equals Q_n.
double abel_weight_sum(const WeightSequence& q, std::int64_t n);

// Conditional expectation of F_n onto rank-N cosets via its spectrum
// F_n^(j) = Q_{n-j} / Q_n (j < n). Exact F_n whenever n <= M_N.
StepFunction norlund_kernel_projection(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n, int resolution);

// ---- Lemma 2 decomposition ------------------------------------------------

// Both sides of
//   Q_r F_r = Q_r D_{sM_n} - psi_{sM_n-1} sum_{l=1}^{sM_n-2} (q_{r-sM_n+l} - q_{r-sM_n+l+1}) l conj(K_l)
//             - psi_{sM_n-1} (sM_n - 1) q_{r-1} conj(K_{sM_n-1}) + psi_{sM_n} Q_{r-sM_n} F_{r-sM_n}
// for sM_n < r <= (s+1)M_n, 1 <= s < m_n. The table must reach r.
template <class T>
std::pair<BasicStepFunction<T>, BasicStepFunction<T>> lemma2_sides(const WeightSequence& q, const BasicKernelTable<T>& table,
                                                                   std::int64_t r, int n, int s) {
  const auto& gen = table.generator();
  if (n < 0 || n >= gen.depth()) throw RangeError("lemma2 needs 0 <= n < D");
  if (s < 1 || s >= gen.radix(n)) throw RangeError("lemma2 needs 1 <= s < m_n");
  const std::int64_t base = s * gen.ladder(n);
  if (!(base < r && r <= base + gen.ladder(n))) throw RangeError("lemma2 needs s M_n < r <= (s+1) M_n");
  if (r > table.n_max()) throw ResolutionError("kernel table does not reach r");
  auto w = [&](std::int64_t i) -> T { return static_cast<T>(q.q(i)); };
  auto Q = [&](std::int64_t i) -> T {
    if constexpr (std::is_integral_v<T>) {
      T acc = 0;
      for (std::int64_t k = 0; k < i; ++k) acc += w(k);
      return acc;
    } else {
      return static_cast<T>(q.Q(i));
    }
  };

  auto lhs = table.norlund_sum(r, w);

  const auto& psi_prev = table.character(base - 1);
  const auto& psi_base = table.character(base);
  auto rhs = table.dirichlet(base);
  rhs *= Q(r);
  auto acc = BasicStepFunction<T>::zeros(gen, table.resolution());
  for (std::int64_t l = 1; l <= base - 2; ++l) {
    const T c = w(r - base + l) - w(r - base + l + 1);
    const auto& kl = table.fejer_sum(l);  // l K_l
    for (std::int64_t i = 0; i < acc.size(); ++i) acc[i] += c * conj_value(kl[i]);
  }
  if (base - 1 >= 1) {
    const T c = w(r - 1);
    const auto& kl = table.fejer_sum(base - 1);  // (sM_n - 1) K_{sM_n - 1}
    for (std::int64_t i = 0; i < acc.size(); ++i) acc[i] += c * conj_value(kl[i]);
  }
  const auto tail = table.norlund_sum(r - base, w);  // Q_{r-sM_n} F_{r-sM_n}
  for (std::int64_t i = 0; i < rhs.size(); ++i) rhs[i] += -psi_prev[i] * acc[i] + psi_base[i] * tail[i];
  return {std::move(lhs), std::move(rhs)};
}

struct Lemma2Result {
  StepFunction lhs;
  StepFunction rhs;
  VerificationReport report;
};

// Exact integer evaluation when the group is Walsh up to the resolution and
// the weights are integers; double precision (tolerance 1e-9) otherwise.
Lemma2Result lemma2_decomposition(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t r, int n, int s,
                                  int resolution);

// ---- Empirical bound constants ----------------------------------------------

// sup over 1 <= n <= n_max and rank-N cosets of n|K_n| / sum_{A<=|n|} M_A |K_{M_A}|.
VerificationReport fejer_majorant_constant(const GeneratorSequence& gen, std::int64_t n_max, int resolution);

// sup of |F_n| n^alpha / sum_{j<=|n|} M_j^alpha |K_{M_j}|, with per-ladder-block
// sups [M_j, M_{j+1}) in details["blocks"]. Requires non-increasing weights.
VerificationReport lemma3_constant(const WeightSequence& q, const GeneratorSequence& gen, double alpha, std::int64_t n_max,
                                   int resolution);

// For every coset of the complement decomposition of I_N: the sup over its
// rank-N sub-cosets of int_{I_N} |F_r(x - t)| dt divided by
// M_l^alpha M_k / (r^alpha M_N) (pair family) or M_k / M_N (single family).
// F_r is evaluated at resolution order(r) + 1. Requires r >= M_N.
VerificationReport lemma4_integrals(const WeightSequence& q, const GeneratorSequence& gen, double alpha, std::int64_t r,
                                    int N);

}  // namespace vilenkin
