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

#include "vilenkin/kernels.hpp"

#include <cmath>
#include <limits>

#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

constexpr double kIdentityTolerance = 1e-9;

nlohmann::json coset_witness(const CosetLayout& layout, std::int64_t i) {
  return {{"coset_index", i}, {"digits", layout.digits(i)}};
}

void require_representable(const GeneratorSequence& gen, std::int64_t n, int resolution) {
  if (resolution < 0 || resolution > gen.depth()) throw ResolutionError("resolution outside [0, depth]");
  if (n > gen.ladder(resolution))
    throw ResolutionError("kernel index " + std::to_string(n) + " is not representable at resolution " +
                          std::to_string(resolution));
}

template <class T>
std::vector<VerificationReport> closed_forms_impl(const GeneratorSequence& gen, int N) {
  const bool exact = std::is_integral_v<T>;
  const BasicKernelTable<T> table(gen, gen.ladder(N), N);
  const CosetLayout layout(gen, N);

  auto make = [&](std::string identity) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.parameters = {{"m", gen.to_string()}, {"resolution", N}};
    r.exact = exact;
    r.tolerance = exact ? 0.0 : kIdentityTolerance;
    return r;
  };
  auto observe = [&](VerificationReport& rep, const BasicStepFunction<T>& a, const BasicStepFunction<T>& b,
                     nlohmann::json params) {
    double worst = -1.0;
    std::int64_t at = 0;
    for (std::int64_t i = 0; i < a.size(); ++i) {
      double d;
      if constexpr (std::is_integral_v<T>)
        d = static_cast<double>(a[i] > b[i] ? a[i] - b[i] : b[i] - a[i]);
      else
        d = std::abs(a[i] - b[i]);
      if (d > worst) worst = d, at = i;
    }
    params["at"] = coset_witness(layout, at);
    rep.observe_deviation(worst, params);
  };

  VerificationReport ladder = make("dirichlet_ladder");
  for (int n = 0; n <= N; ++n)
    observe(ladder, dirichlet_ladder_form<T>(gen, n, N), table.dirichlet(gen.ladder(n)), {{"n", n}});

  VerificationReport multiple = make("dirichlet_multiple");
  VerificationReport reflected = make("dirichlet_reflected");
  std::int64_t reflected_cases = 0;
  for (int n = 0; n < N; ++n)
    for (int s = 1; s < gen.radix(n); ++s) {
      const std::int64_t base = s * gen.ladder(n);
      observe(multiple, dirichlet_multiple_form<T>(gen, s, n, N), table.dirichlet(base), {{"n", n}, {"s", s}});
      for (std::int64_t j = 1; j <= gen.ladder(n) - 1; ++j, ++reflected_cases)
        observe(reflected, dirichlet_reflected_form<T>(gen, s, n, j, N), table.dirichlet(base - j),
                {{"n", n}, {"s", s}, {"j", j}});
    }
  if (reflected_cases == 0) reflected.max_deviation = 0.0;
  reflected.details["cases"] = reflected_cases;

  VerificationReport fejer_form = make("fejer_ladder");
  fejer_form.max_deviation = 0.0;
  for (int n = 0; n <= N; ++n) {
    auto sub = fejer_closed_form_check(gen, n, N);
    fejer_form.observe_deviation(*sub.max_deviation, sub.argmax_witness);
    fejer_form.details["n=" + std::to_string(n)] = sub.details;
  }

  std::vector<VerificationReport> out{ladder, multiple, reflected, fejer_form};
  for (auto& r : out) r.finalize();
  return out;
}

}  // namespace

int kernel_resolution(const GeneratorSequence& gen, std::int64_t n) {
  if (n < 0) throw DomainError("kernel index must be >= 0");
  if (n == 0) return 0;
  return std::min(order(n, gen) + 1, gen.depth());
}

bool walsh_up_to(const GeneratorSequence& gen, int resolution) {
  for (int k = 0; k < resolution; ++k)
    if (gen.radix(k) != 2) return false;
  return true;
}

StepFunction dirichlet(const GeneratorSequence& gen, std::int64_t n, int resolution) {
  if (n < 0) throw DomainError("D_n needs n >= 0");
  require_representable(gen, n, resolution);
  auto out = StepFunction::zeros(gen, resolution);
  for (std::int64_t k = 0; k < n; ++k) out += character_function(gen, k, resolution);
  return out;
}

ExactStepFunction dirichlet_exact(const GeneratorSequence& gen, std::int64_t n, int resolution) {
  if (n < 0) throw DomainError("D_n needs n >= 0");
  require_representable(gen, n, resolution);
  auto out = ExactStepFunction::zeros(gen, resolution);
  for (std::int64_t k = 0; k < n; ++k) out += walsh_character_function(gen, k, resolution);
  return out;
}

std::vector<VerificationReport> dirichlet_closed_forms(const GeneratorSequence& gen, int resolution) {
  if (resolution < 1 || resolution > gen.depth()) throw ResolutionError("closed forms need 1 <= resolution <= D");
  if (walsh_up_to(gen, resolution)) return closed_forms_impl<std::int64_t>(gen, resolution);
  return closed_forms_impl<Complex>(gen, resolution);
}

// ---------------------------------------------------------------------------

StepFunction fejer(const GeneratorSequence& gen, std::int64_t n, int resolution) {
  if (n < 1) throw DomainError("K_n needs n >= 1");
  require_representable(gen, n, resolution);
  auto d = StepFunction::zeros(gen, resolution);
  auto sum = StepFunction::zeros(gen, resolution);
  for (std::int64_t k = 1; k <= n; ++k) {
    d += character_function(gen, k - 1, resolution);
    sum += d;
  }
  const double scale = static_cast<double>(n);
  for (std::int64_t i = 0; i < sum.size(); ++i) sum[i] /= scale;
  return sum;
}

FejerBranch fejer_branch(std::span<const int> digits, int n, int* t) {
  int first = -1;
  for (int k = 0; k < n; ++k)
    if (digits[static_cast<std::size_t>(k)] != 0) {
      first = k;
      break;
    }
  if (first < 0) return FejerBranch::center;
  if (t) *t = first;
  for (int k = first + 1; k < n; ++k)
    if (digits[static_cast<std::size_t>(k)] != 0) return FejerBranch::zero;
  return FejerBranch::geometric;
}

StepFunction fejer_ladder_form(const GeneratorSequence& gen, int n, int resolution) {
  if (n < 0 || n > resolution || resolution > gen.depth()) throw ResolutionError("K_{M_n} needs n <= resolution <= D");
  const CosetLayout layout(gen, resolution);
  auto out = StepFunction::zeros(gen, resolution);
  for (std::int64_t i = 0; i < out.size(); ++i) {
    const auto digits = layout.digits(i);
    int t = 0;
    switch (fejer_branch(digits, n, &t)) {
      case FejerBranch::center: out[i] = (static_cast<double>(gen.ladder(n)) + 1.0) / 2.0; break;
      case FejerBranch::zero: out[i] = 0.0; break;
      case FejerBranch::geometric:
        out[i] = static_cast<double>(gen.ladder(t)) / (1.0 - rademacher(t, layout.element(i)));
        break;
    }
  }
  return out;
}

VerificationReport fejer_closed_form_check(const GeneratorSequence& gen, int n, int resolution) {
  if (n < 0 || n > resolution || resolution > gen.depth()) throw ResolutionError("K_{M_n} needs n <= resolution <= D");
  VerificationReport rep;
  rep.identity = "fejer_ladder";
  rep.parameters = {{"m", gen.to_string()}, {"n", n}, {"resolution", resolution}};
  rep.exact = walsh_up_to(gen, resolution);
  rep.tolerance = rep.exact ? 0.0 : kIdentityTolerance;
  const CosetLayout layout(gen, resolution);
  const std::int64_t Mn = gen.ladder(n);

  std::int64_t counts[3] = {0, 0, 0};
  double branch_dev[3] = {0.0, 0.0, 0.0};
  rep.max_deviation = 0.0;
  auto record = [&](FejerBranch b, std::int64_t i, double dev) {
    const auto idx = static_cast<std::size_t>(b);
    ++counts[idx];
    branch_dev[idx] = std::max(branch_dev[idx], dev);
    if (dev > *rep.max_deviation || i == 0) rep.observe_deviation(dev, coset_witness(layout, i));
  };

  if (rep.exact) {
    // Compare 2 * sum_{k=1}^{M_n} D_k with M_n times twice the branch value.
    const ExactKernelTable table(gen, Mn, resolution);
    const auto& sum = table.fejer_sum(Mn);
    for (std::int64_t i = 0; i < sum.size(); ++i) {
      int t = 0;
      const auto b = fejer_branch(layout.digits(i), n, &t);
      std::int64_t twice = 0;
      if (b == FejerBranch::center) twice = Mn + 1;
      if (b == FejerBranch::geometric) twice = gen.ladder(t);  // r_t(x) = -1
      const std::int64_t diff = 2 * sum[i] - Mn * twice;
      record(b, i, static_cast<double>(diff < 0 ? -diff : diff) / static_cast<double>(2 * Mn));
    }
  } else {
    const auto direct = fejer(gen, Mn, resolution);
    const auto closed = fejer_ladder_form(gen, n, resolution);
    for (std::int64_t i = 0; i < direct.size(); ++i)
      record(fejer_branch(layout.digits(i), n), i, std::abs(direct[i] - closed[i]));
  }
  const char* names[3] = {"zero", "geometric", "center"};
  for (int b = 0; b < 3; ++b)
    rep.details[names[b]] = {{"cosets", counts[b]}, {"max_deviation", branch_dev[b]}};
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------------------

StepFunction norlund_kernel_sum(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n, int resolution) {
  if (n < 0) throw DomainError("kernel index must be >= 0");
  require_representable(gen, n, resolution);
  auto d = StepFunction::zeros(gen, resolution);
  auto out = StepFunction::zeros(gen, resolution);
  for (std::int64_t k = 1; k <= n; ++k) {
    d += character_function(gen, k - 1, resolution);
    const double c = q.q(n - k);
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] += c * d[i];
  }
  return out;
}

namespace {

StepFunction normalize(StepFunction sum, const WeightSequence& q, std::int64_t n) {
  const double Qn = q.Q(n);
  if (!(Qn > 0.0)) throw DegenerateWeightsError("Q_" + std::to_string(n) + " = 0 for weights " + q.label());
  for (std::int64_t i = 0; i < sum.size(); ++i) sum[i] /= Qn;
  return sum;
}

}  // namespace

StepFunction norlund_kernel(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n, int resolution) {
  if (n < 1) throw DomainError("F_n needs n >= 1");
  return normalize(norlund_kernel_sum(q, gen, n, resolution), q, n);
}

StepFunction norlund_kernel_abel_sum(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n,
                                     int resolution) {
  if (n < 1) throw DomainError("F_n needs n >= 1");
  require_representable(gen, n, resolution);
  auto d = StepFunction::zeros(gen, resolution);
  auto jk = StepFunction::zeros(gen, resolution);  // j K_j
  auto out = StepFunction::zeros(gen, resolution);
  for (std::int64_t j = 1; j <= n; ++j) {
    d += character_function(gen, j - 1, resolution);
    jk += d;
    const double c = j < n ? q.q(n - j) - q.q(n - j - 1) : q.q(0);
    for (std::int64_t i = 0; i < out.size(); ++i) out[i] += c * jk[i];
  }
  return out;
}

StepFunction norlund_kernel_abel(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n, int resolution) {
  return normalize(norlund_kernel_abel_sum(q, gen, n, resolution), q, n);
}

double abel_weight_sum(const WeightSequence& q, std::int64_t n) {
  if (n < 1) throw DomainError("n must be >= 1");
  double sum = q.q(0) * static_cast<double>(n);
  for (std::int64_t j = 1; j <= n - 1; ++j) sum += (q.q(n - j) - q.q(n - j - 1)) * static_cast<double>(j);
  return sum;
}

StepFunction norlund_kernel_projection(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t n,
                                       int resolution) {
  if (n < 1) throw DomainError("F_n needs n >= 1");
  const double Qn = q.Q(n);
  if (!(Qn > 0.0)) throw DegenerateWeightsError("Q_" + std::to_string(n) + " = 0 for weights " + q.label());
  auto s = Spectrum::zeros(gen, resolution);
  const std::int64_t top = std::min(n, s.size());
  for (std::int64_t j = 0; j < top; ++j) s[j] = q.Q(n - j) / Qn;
  return synthesize(s);
}

// ---------------------------------------------------------------------------

Lemma2Result lemma2_decomposition(const WeightSequence& q, const GeneratorSequence& gen, std::int64_t r, int n, int s,
                                  int resolution) {
  require_representable(gen, r, resolution);
  VerificationReport rep;
  rep.identity = "lemma2";
  rep.parameters = {{"m", gen.to_string()}, {"weights", q.label()}, {"r", r}, {"n", n}, {"s", s}, {"resolution", resolution}};
  rep.exact = walsh_up_to(gen, resolution) && q.integral();
  rep.tolerance = rep.exact ? 0.0 : kIdentityTolerance;
  const CosetLayout layout(gen, resolution);
  if (rep.exact) {
    const ExactKernelTable table(gen, r, resolution);
    auto [lhs, rhs] = lemma2_sides(q, table, r, n, s);
    std::int64_t worst = -1, at = 0;
    for (std::int64_t i = 0; i < lhs.size(); ++i) {
      const std::int64_t d = lhs[i] > rhs[i] ? lhs[i] - rhs[i] : rhs[i] - lhs[i];
      if (d > worst) worst = d, at = i;
    }
    rep.observe_deviation(static_cast<double>(worst), coset_witness(layout, at));
    rep.finalize();
    return {to_complex(lhs), to_complex(rhs), std::move(rep)};
  }
  const KernelTable table(gen, r, resolution);
  auto [lhs, rhs] = lemma2_sides(q, table, r, n, s);
  double worst = -1.0;
  std::int64_t at = 0;
  for (std::int64_t i = 0; i < lhs.size(); ++i) {
    const double d = std::abs(lhs[i] - rhs[i]);
    if (d > worst) worst = d, at = i;
  }
  rep.observe_deviation(worst, coset_witness(layout, at));
  rep.finalize();
  return {std::move(lhs), std::move(rhs), std::move(rep)};
}

// ---------------------------------------------------------------------------

namespace {

// |K_{M_j}| for j = 0..top at this resolution (closed form is not used here).
std::vector<RealStepFunction> ladder_fejer_magnitudes(const GeneratorSequence& gen, int top, int resolution) {
  const auto ones = make_weights("constant", gen.ladder(top));
  std::vector<RealStepFunction> out;
  for (int j = 0; j <= top; ++j) out.push_back(abs(norlund_kernel_projection(ones, gen, gen.ladder(j), resolution)));
  return out;
}

struct RatioSweep {
  VerificationReport report;
  nlohmann::json blocks = nlohmann::json::array();
};

}  // namespace

VerificationReport fejer_majorant_constant(const GeneratorSequence& gen, std::int64_t n_max, int resolution) {
  require_representable(gen, n_max, resolution);
  if (n_max < 1) throw RangeError("n_max must be >= 1");
  VerificationReport rep;
  rep.identity = "fejer_majorant";
  rep.parameters = {{"m", gen.to_string()}, {"n_max", n_max}, {"resolution", resolution}};
  const CosetLayout layout(gen, resolution);
  const auto ones = make_weights("constant", n_max);
  const auto ladder = ladder_fejer_magnitudes(gen, order(n_max, gen), resolution);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto kn = abs(norlund_kernel_projection(ones, gen, n, resolution));
    const int top = order(n, gen);
    for (std::int64_t i = 0; i < kn.size(); ++i) {
      double den = 0.0;
      for (int A = 0; A <= top; ++A) den += static_cast<double>(gen.ladder(A)) * ladder[static_cast<std::size_t>(A)][i];
      const double num = static_cast<double>(n) * kn[i];
      if (den <= 0.0) {
        if (num > 1e-9) rep.add_violation("zero majorant with nonzero n|K_n| at n=" + std::to_string(n));
        continue;
      }
      rep.observe_ratio(num / den, {{"n", n}, {"at", coset_witness(layout, i)}});
    }
  }
  rep.finalize();
  return rep;
}

VerificationReport lemma3_constant(const WeightSequence& q, const GeneratorSequence& gen, double alpha,
                                   std::int64_t n_max, int resolution) {
  if (!q.non_increasing()) throw ContractError("lemma3 sweep needs non-increasing weights (" + q.label() + ")");
  if (!q.is_norlund()) throw ContractError("lemma3 sweep needs Norlund weights");
  if (n_max < 1) throw RangeError("n_max must be >= 1");
  require_representable(gen, n_max, resolution);
  VerificationReport rep;
  rep.identity = "lemma3";
  rep.parameters = {{"m", gen.to_string()}, {"weights", q.label()}, {"alpha", alpha}, {"n_max", n_max},
                    {"resolution", resolution}};
  const CosetLayout layout(gen, resolution);
  const auto ladder = ladder_fejer_magnitudes(gen, order(n_max, gen), resolution);

  struct Block {
    std::int64_t first, last;
    double sup = 0.0;
    std::int64_t argmax_n = 0, argmax_coset = 0;
    bool complete;
  };
  std::vector<Block> blocks;
  for (int j = 0; j < gen.depth() && gen.ladder(j) <= n_max; ++j)
    blocks.push_back({gen.ladder(j), std::min(gen.ladder(j + 1) - 1, n_max), 0.0, 0, 0, gen.ladder(j + 1) - 1 <= n_max});
  if (n_max == gen.ladder(gen.depth())) blocks.push_back({n_max, n_max, 0.0, 0, 0, false});

  std::int64_t skipped = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (!(q.Q(n) > 0.0)) {
      ++skipped;
      continue;
    }
    const auto fn = abs(norlund_kernel_projection(q, gen, n, resolution));
    const int top = order(n, gen);
    Block& block = blocks[static_cast<std::size_t>(top)];
    const double scale = std::pow(static_cast<double>(n), alpha);
    for (std::int64_t i = 0; i < fn.size(); ++i) {
      double den = 0.0;
      for (int j = 0; j <= top; ++j)
        den += std::pow(static_cast<double>(gen.ladder(j)), alpha) * ladder[static_cast<std::size_t>(j)][i];
      const double num = fn[i] * scale;
      if (den <= 0.0) {
        if (num > 1e-9) rep.add_violation("zero majorant with nonzero |F_n| at n=" + std::to_string(n));
        continue;
      }
      const double ratio = num / den;
      if (!std::isfinite(ratio)) rep.add_violation("non-finite ratio at n=" + std::to_string(n));
      if (ratio > block.sup) block.sup = ratio, block.argmax_n = n, block.argmax_coset = i;
      rep.observe_ratio(ratio, {{"n", n}, {"at", coset_witness(layout, i)}});
    }
  }
  rep.details["skipped_indices"] = skipped;
  rep.details["blocks"] = nlohmann::json::array();
  for (const auto& b : blocks)
    rep.details["blocks"].push_back({{"first", b.first},
                                     {"last", b.last},
                                     {"sup", b.sup},
                                     {"argmax_n", b.argmax_n},
                                     {"argmax_coset", b.argmax_coset},
                                     {"complete", b.complete}});
  for (const auto& b : blocks)
    if (b.sup > rep.empirical_constant.value_or(0.0) * (1.0 + 1e-12))
      rep.add_violation("block sup exceeds the global sup");
  rep.finalize();
  return rep;
}

VerificationReport lemma4_integrals(const WeightSequence& q, const GeneratorSequence& gen, double alpha, std::int64_t r,
                                    int N) {
  if (N < 1 || N > gen.depth()) throw RangeError("lemma4 needs 1 <= N <= D");
  if (r < gen.ladder(N)) throw ContractError("lemma4 needs r >= M_N");
  const int R = order(r, gen) + 1;
  if (R > gen.depth()) throw ResolutionError("F_r needs resolution order(r)+1 = " + std::to_string(R) + " > depth");
  VerificationReport rep;
  rep.identity = "lemma4";
  rep.parameters = {{"m", gen.to_string()}, {"weights", q.label()}, {"alpha", alpha}, {"r", r}, {"N", N}, {"resolution", R}};
  const auto fr = abs(norlund_kernel_projection(q, gen, r, R));
  const std::int64_t width = gen.ladder(R) / gen.ladder(N);
  const double MR = static_cast<double>(gen.ladder(R));
  const double MN = static_cast<double>(gen.ladder(N));

  // int_{I_N(x)} |F_r| for every rank-N coset x.
  std::vector<double> local(static_cast<std::size_t>(gen.ladder(N)));
  for (std::size_t c = 0; c < local.size(); ++c) {
    double s = 0.0;
    for (std::int64_t u = 0; u < width; ++u) s += fr[static_cast<std::int64_t>(c) * width + u];
    local[c] = s / MR;
  }

  double family_const[2] = {0.0, 0.0};
  rep.details["cosets"] = nlohmann::json::array();
  for (const auto& cc : complement_decomposition(N, gen)) {
    const auto [lo, hi] = cc.coset.index_range(N);
    double integral = 0.0;
    for (std::int64_t c = lo; c < hi; ++c) integral = std::max(integral, local[static_cast<std::size_t>(c)]);
    const double Mk = static_cast<double>(gen.ladder(cc.k));
    const double bound = cc.family == ComplementFamily::pair
                             ? std::pow(static_cast<double>(gen.ladder(cc.l)), alpha) * Mk /
                                   (std::pow(static_cast<double>(r), alpha) * MN)
                             : Mk / MN;
    const double ratio = integral / bound;
    if (!std::isfinite(ratio)) rep.add_violation("non-finite ratio on " + cc.coset.to_string());
    const auto fam = static_cast<std::size_t>(cc.family);
    family_const[fam] = std::max(family_const[fam], ratio);
    const char* family = cc.family == ComplementFamily::pair ? "pair" : "single";
    rep.details["cosets"].push_back(
        {{"coset", cc.coset.to_string()}, {"family", family}, {"integral", integral}, {"bound", bound}, {"ratio", ratio}});
    rep.observe_ratio(ratio, {{"coset", cc.coset.to_string()}, {"family", family}});
  }
  rep.details["pair_constant"] = family_const[0];
  rep.details["single_constant"] = family_const[1];
  rep.finalize();
  return rep;
}

}  // namespace vilenkin
