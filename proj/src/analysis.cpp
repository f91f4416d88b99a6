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

#include "vilenkin/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "vilenkin/characters.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/parallel.hpp"
#include "vilenkin/random.hpp"

namespace vilenkin {

namespace {

// Evaluates multiplier transforms g^(j) = m(j) f^(j) against a fixed spectrum.
class SpectralEngine {
 public:
  explicit SpectralEngine(const StepFunction& f) : spectrum_(analyze(f)) {}

  std::int64_t size() const noexcept { return spectrum_.size(); }

  template <class Multiplier>
  StepFunction apply(Multiplier&& m, std::int64_t top) const {
    auto s = Spectrum::zeros(spectrum_.generator(), spectrum_.resolution());
    top = std::min(top, s.size());
    for (std::int64_t j = 0; j < top; ++j) s[j] = spectrum_[j] * m(j);
    return synthesize(s);
  }

  const Spectrum& spectrum() const noexcept { return spectrum_; }

 private:
  Spectrum spectrum_;
};

void require_norlund_index(const WeightSequence& q, std::int64_t n) {
  if (n < 1) throw DomainError("mean index must be >= 1");
  if (n > q.n_max() + 1)
    throw RangeError("weights " + q.label() + " stored up to " + std::to_string(q.n_max()) + ", mean index " +
                     std::to_string(n) + " needs q_" + std::to_string(n - 1));
  if (!(q.Q(n) > 0.0)) throw DegenerateWeightsError("Q_" + std::to_string(n) + " = 0 for weights " + q.label());
}

double log2_of(std::int64_t n) { return std::log2(static_cast<double>(n)); }

double harmonic(std::int64_t n) {
  double s = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) s += 1.0 / static_cast<double>(k);
  return s;
}

// Coefficients c_1..c_n of a mean sum_k c_k S_k f.
std::vector<double> classical_coefficients(ClassicalMean kind, std::int64_t n, double alpha, CesaroNormalization norm) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  switch (kind) {
    case ClassicalMean::fejer:
      for (std::int64_t k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = 1.0 / static_cast<double>(n);
      break;
    case ClassicalMean::cesaro: {
      if (!(alpha > 0.0) || alpha > 1.0) throw DomainError("Cesaro order must lie in (0, 1]");
      const auto a = cesaro_numbers(alpha - 1.0, n);
      const auto A = cesaro_numbers(alpha, n);
      const double den = norm == CesaroNormalization::standard ? A[static_cast<std::size_t>(n - 1)]
                                                               : A[static_cast<std::size_t>(n)];
      for (std::int64_t k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(n - k)] / den;
      break;
    }
    case ClassicalMean::riesz_log:
    case ClassicalMean::norlund_log: {
      if (n < 2) throw DomainError("logarithmic means need n >= 2");
      const double l = harmonic(n - 1);
      for (std::int64_t k = 1; k <= n - 1; ++k)
        c[static_cast<std::size_t>(k)] =
            1.0 / (static_cast<double>(kind == ClassicalMean::riesz_log ? k : n - k) * l);
      break;
    }
  }
  return c;
}

// g^(j) = f^(j) sum_{k=j+1}^n c_k.
StepFunction combine_partial_sums(const SpectralEngine& engine, const std::vector<double>& c) {
  const auto n = static_cast<std::int64_t>(c.size()) - 1;
  std::vector<double> suffix(c.size() + 1, 0.0);
  for (std::int64_t k = n; k >= 1; --k)
    suffix[static_cast<std::size_t>(k)] = suffix[static_cast<std::size_t>(k + 1)] + c[static_cast<std::size_t>(k)];
  return engine.apply([&](std::int64_t j) { return suffix[static_cast<std::size_t>(j + 1)]; }, n);
}

StepFunction mean_from_engine(const WeightSequence& q, std::int64_t n, const SpectralEngine& engine) {
  if (q.is_norlund()) {
    require_norlund_index(q, n);
    const double Qn = q.Q(n);
    return engine.apply([&](std::int64_t j) { return q.Q(n - j) / Qn; }, n);
  }
  if (n < 2) throw DomainError("logarithmic means need n >= 2");
  // R_n: sum_{k=j+1}^{n-1} 1/k / l_n = (l_n - H_j) / l_n.
  const double l = harmonic(n - 1);
  double h = 0.0;
  std::vector<double> mult(static_cast<std::size_t>(std::min(n, engine.size())));
  for (std::size_t j = 0; j < mult.size(); ++j) {
    mult[j] = (l - h) / l;
    h += 1.0 / static_cast<double>(j + 1);
  }
  return engine.apply([&](std::int64_t j) { return mult[static_cast<std::size_t>(j)]; }, n);
}

StepFunction norlund_kernel_at(const WeightSequence& q, std::int64_t n, const GeneratorSequence& gen, int N) {
  if (n <= gen.ladder(N)) return norlund_kernel(q, gen, n, N);
  if (n <= gen.ladder(gen.depth())) {
    const int R = std::max(N, kernel_resolution(gen, n));
    return norlund_kernel(q, gen, n, R).coarsen(N);
  }
  return norlund_kernel_projection(q, gen, n, N);
}

}  // namespace

StepFunction norlund_mean(const WeightSequence& q, std::int64_t n, const StepFunction& f, MeanPath path) {
  if (!q.is_norlund()) throw ContractError("weights " + q.label() + " do not define a Norlund mean");
  require_norlund_index(q, n);
  const double Qn = q.Q(n);
  switch (path) {
    case MeanPath::spectral:
      return mean_from_engine(q, n, SpectralEngine(f));
    case MeanPath::partial_sums: {
      const auto& gen = f.generator();
      const int N = f.resolution();
      const std::int64_t M = f.size();
      const auto fhat = analyze(f);
      auto s = StepFunction::zeros(gen, N);
      auto acc = StepFunction::zeros(gen, N);
      for (std::int64_t k = 1; k <= std::min(n, M - 1); ++k) {
        auto psi = character_function(gen, k - 1, N);
        psi *= fhat[k - 1];
        s += psi;
        const double c = q.q(n - k);
        for (std::int64_t i = 0; i < M; ++i) acc[i] += c * s[i];
      }
      if (n >= M) {
        const double c = q.Q(n - M + 1);
        for (std::int64_t i = 0; i < M; ++i) acc[i] += c * f[i];
      }
      for (std::int64_t i = 0; i < M; ++i) acc[i] /= Qn;
      return acc;
    }
    case MeanPath::convolution:
      return convolve(f, norlund_kernel_at(q, n, f.generator(), f.resolution()));
  }
  throw ContractError("unknown mean path");
}

StepFunction classical_mean(ClassicalMean kind, std::int64_t n, const StepFunction& f, double alpha,
                            CesaroNormalization norm) {
  if (n < 1) throw DomainError("mean index must be >= 1");
  return combine_partial_sums(SpectralEngine(f), classical_coefficients(kind, n, alpha, norm));
}

StepFunction summability_mean(const WeightSequence& q, std::int64_t n, const StepFunction& f) {
  return mean_from_engine(q, n, SpectralEngine(f));
}

// ---------------------------------------------------------------------------

namespace {

void require_positive_exponent(double p) {
  if (!(p > 0.0)) throw DomainError("exponent p must be > 0");
}

double power_mean(const RealStepFunction& g, double p) {
  double s = 0.0;
  for (std::int64_t i = 0; i < g.size(); ++i)
    if (g[i] != 0.0) s += std::pow(g[i], p);
  return s / static_cast<double>(g.size());
}

}  // namespace

double lp_integral(const StepFunction& f, double p) {
  require_positive_exponent(p);
  return power_mean(abs(f), p);
}

double lp_quasinorm(const StepFunction& f, double p) { return std::pow(lp_integral(f, p), 1.0 / p); }

double weak_lp_integral(const StepFunction& f, double p) {
  require_positive_exponent(p);
  auto a = abs(f);
  std::vector<double> v(a.values().begin(), a.values().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  const double M = static_cast<double>(v.size());
  double best = 0.0;
  for (std::size_t i = 0; i < v.size() && v[i] > 0.0; ++i)
    if (i + 1 == v.size() || v[i + 1] < v[i])
      best = std::max(best, std::pow(v[i], p) * static_cast<double>(i + 1) / M);
  return best;
}

double weak_lp(const StepFunction& f, double p) { return std::pow(weak_lp_integral(f, p), 1.0 / p); }

RealStepFunction martingale_maximal(const StepFunction& f) {
  const auto& gen = f.generator();
  const int N = f.resolution();
  auto out = abs(f);
  for (int n = 0; n < N; ++n) {
    const std::int64_t width = f.size() / gen.ladder(n);
    for (std::int64_t b = 0; b < gen.ladder(n); ++b) {
      Complex s{};
      for (std::int64_t u = 0; u < width; ++u) s += f[b * width + u];
      const double m = std::abs(s / static_cast<double>(width));
      for (std::int64_t u = 0; u < width; ++u) out[b * width + u] = std::max(out[b * width + u], m);
    }
  }
  return out;
}

double hardy_integral(const StepFunction& f, double p) {
  require_positive_exponent(p);
  return power_mean(martingale_maximal(f), p);
}

double hardy_norm(const StepFunction& f, double p) { return std::pow(hardy_integral(f, p), 1.0 / p); }

// ---------------------------------------------------------------------------

Atom make_atom(const GeneratorSequence& gen, double p, int N, AtomProfile profile, std::uint64_t seed, int sub_depth) {
  if (!(p > 0.0) || p > 1.0) throw DomainError("atoms need 0 < p <= 1");
  if (N < 1) throw RangeError("atoms need N >= 1");
  if (sub_depth < 1) throw RangeError("atoms need sub_depth >= 1");
  if (N + sub_depth > gen.depth())
    throw RangeError("I_" + std::to_string(N) + " has no rank-" + std::to_string(N + sub_depth) + " sub-cosets at depth " +
                     std::to_string(gen.depth()));
  const int R = N + sub_depth;
  const double c = std::pow(static_cast<double>(gen.ladder(N)), 1.0 / p);
  const Coset support(N, GroupElement::zero(gen));
  auto a = StepFunction::zeros(gen, R);
  const std::int64_t cells = gen.ladder(R) / gen.ladder(N);
  if (profile == AtomProfile::haar) {
    const std::int64_t half = cells / gen.radix(N);
    for (std::int64_t i = 0; i < half; ++i) {
      a[i] = c;
      a[half + i] = -c;
    }
  } else {
    // Integer numerators with the mean removed exactly, so +-pairs stay exact negatives.
    SplitMix64 rng(seed);
    std::vector<std::int64_t> k(static_cast<std::size_t>(cells));
    std::int64_t top = 0;
    while (top == 0) {
      std::int64_t sum = 0;
      for (auto& x : k) sum += (x = static_cast<std::int64_t>(rng.next() >> 40) - (std::int64_t{1} << 23));
      top = 0;
      for (auto& x : k) top = std::max(top, std::abs(x = x * cells - sum));
    }
    for (std::int64_t i = 0; i < cells; ++i)
      a[i] = c * (static_cast<double>(k[static_cast<std::size_t>(i)]) / static_cast<double>(top));
  }
  return {p, support, std::move(a), seed};
}

VerificationReport check_atom(const Atom& atom) {
  VerificationReport rep;
  rep.identity = "atom";
  rep.parameters = {{"p", atom.p}, {"support", atom.support.to_string()}, {"seed", atom.seed}};
  rep.tolerance = 1e-12;
  const auto& f = atom.function;
  const auto [lo, hi] = atom.support.index_range(f.resolution());
  const double bound = std::pow(1.0 / atom.support.measure(), 1.0 / atom.p);
  Complex mean{};
  for (std::int64_t i = 0; i < f.size(); ++i) {
    const bool inside = lo <= i && i < hi;
    if (!inside && f[i] != Complex{}) {
      rep.add_violation("nonzero off the support at coset " + std::to_string(i));
      break;
    }
    if (std::abs(f[i]) > bound * (1.0 + 1e-12)) rep.add_violation("sup bound exceeded at coset " + std::to_string(i));
    mean += f[i];
  }
  rep.observe_deviation(std::abs(mean / static_cast<double>(f.size())), {{"integral", "mean"}});
  rep.details["sup"] = sup_norm(f);
  rep.details["bound"] = bound;
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Calls visit(n, running) after folding n into the running maxima.
template <class Visit>
MaximalResult sweep_maximal(const WeightSequence& q, const StepFunction& f, const MaximalConfig& cfg, Visit&& visit) {
  if (cfg.n_max < 1) throw RangeError("maximal operator needs n_max >= 1");
  const SpectralEngine engine(f);
  MaximalResult out{RealStepFunction::zeros(f.generator(), f.resolution()),
                    RealStepFunction::zeros(f.generator(), f.resolution()),
                    std::vector<std::int64_t>(static_cast<std::size_t>(f.size()), 0)};
  for (std::int64_t n = std::max<std::int64_t>(cfg.n_min, 1); n <= cfg.n_max; ++n) {
    if (!(q.Q(n) > 0.0)) continue;
    const auto t = abs(mean_from_engine(q, n, engine));
    const double w = std::pow(std::log2(static_cast<double>(n) + 1.0), 1.0 + cfg.alpha);
    for (std::int64_t i = 0; i < t.size(); ++i) {
      out.unweighted[i] = std::max(out.unweighted[i], t[i]);
      const double v = t[i] / w;
      if (v > out.weighted[i]) {
        out.weighted[i] = v;
        out.argmax[static_cast<std::size_t>(i)] = n;
      }
    }
    visit(n, out);
  }
  return out;
}

double complement_integral(const RealStepFunction& g, int N, double exponent) {
  const auto& gen = g.generator();
  const double M = static_cast<double>(g.size());
  double sum = 0.0;
  for (const auto& cc : complement_decomposition(N, gen)) {
    const auto [lo, hi] = cc.coset.index_range(g.resolution());
    for (std::int64_t i = lo; i < hi; ++i)
      if (g[i] != 0.0) sum += std::pow(g[i], exponent);
  }
  return sum / M;
}

std::vector<double> atom_integrals(const WeightSequence& q, double alpha, const Atom& atom,
                                   const std::vector<std::int64_t>& n_maxes) {
  const int N = atom.support.rank();
  const auto& gen = atom.function.generator();
  const double exponent = 1.0 / (1.0 + alpha);
  std::vector<double> out(n_maxes.size(), 0.0);
  const std::int64_t top = *std::max_element(n_maxes.begin(), n_maxes.end());
  if (top <= gen.ladder(N)) return out;
  MaximalConfig cfg{top, alpha, gen.ladder(N) + 1};
  sweep_maximal(q, atom.function, cfg, [&](std::int64_t n, const MaximalResult& r) {
    for (std::size_t i = 0; i < n_maxes.size(); ++i)
      if (n_maxes[i] == n) out[i] = complement_integral(r.weighted, N, exponent);
  });
  return out;
}

}  // namespace

MaximalResult weighted_maximal(const WeightSequence& q, const StepFunction& f, const MaximalConfig& cfg) {
  return sweep_maximal(q, f, cfg, [](std::int64_t, const MaximalResult&) {});
}

std::vector<std::uint64_t> atom_seeds(std::uint64_t seed, int N, int count) {
  SplitMix64 rng(seed + static_cast<std::uint64_t>(N));
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(count, 0)));
  for (auto& s : out) s = rng.next();
  return out;
}

double atom_integral(const WeightSequence& q, double alpha, const Atom& atom, std::int64_t n_max) {
  return atom_integrals(q, alpha, atom, {n_max}).front();
}

nlohmann::json Theorem1Report::to_json() const {
  auto rows = [](const std::vector<Theorem1Row>& v) {
    auto a = nlohmann::json::array();
    for (const auto& r : v) a.push_back({{"N", r.N}, {"n_max", r.n_max}, {"atom_seed", r.atom_seed}, {"value", r.value}});
    return a;
  };
  return {{"family", family}, {"alpha", alpha},        {"p", p},
          {"max_value", max_value}, {"maxima", rows(maxima)}, {"table", rows(table)},
          {"warnings", warnings}};
}

Theorem1Report theorem1_experiment(const WeightSequence& q, double alpha, const Theorem1Config& cfg) {
  if (cfg.atoms < 1) throw RangeError("experiment needs at least one atom");
  if (cfg.levels.empty() || cfg.n_max_factors.empty()) throw RangeError("experiment needs levels and n_max factors");
  Theorem1Report rep;
  rep.family = q.label();
  rep.alpha = alpha;
  rep.p = cfg.p;
  const auto& gen = cfg.generator;

  std::int64_t needed = 0;
  for (int N : cfg.levels) {
    if (N < 1 || N + cfg.sub_depth > gen.depth()) throw RangeError("level N=" + std::to_string(N) + " outside the group");
    for (auto f : cfg.n_max_factors) {
      if (f < 1) throw RangeError("n_max factors must be >= 1");
      needed = std::max(needed, f * gen.ladder(N));
    }
  }
  if (q.n_max() + 1 < needed)
    throw RangeError("weights " + q.label() + " stored up to " + std::to_string(q.n_max()) + ", sweep needs " +
                     std::to_string(needed - 1));

  if (!q.non_increasing()) rep.warnings.push_back("weights " + q.label() + " are not non-increasing");
  const std::int64_t probe = q.n_max() - 1;
  if (probe >= 16) {
    const auto c6 = check_6a(q, alpha, probe);
    const auto c7 = check_7a(q, alpha, probe);
    if (c6.verdict == Verdict::violated) rep.warnings.push_back("condition 6a violated up to n=" + std::to_string(probe));
    if (c7.verdict == Verdict::violated) rep.warnings.push_back("condition 7a violated up to n=" + std::to_string(probe));
  } else {
    rep.warnings.push_back("weights too short to probe growth conditions");
  }

  struct Task {
    int N;
    std::uint64_t seed;
    std::vector<std::int64_t> n_maxes;
    std::vector<double> values;
  };
  std::vector<Task> tasks;
  for (int N : cfg.levels) {
    std::vector<std::int64_t> n_maxes;
    for (auto f : cfg.n_max_factors) n_maxes.push_back(f * gen.ladder(N));
    for (auto s : atom_seeds(cfg.seed, N, cfg.atoms)) tasks.push_back({N, s, n_maxes, {}});
  }
  parallel_for(static_cast<std::int64_t>(tasks.size()), [&](std::int64_t t) {
    auto& task = tasks[static_cast<std::size_t>(t)];
    const auto atom = make_atom(gen, cfg.p, task.N, cfg.profile, task.seed, cfg.sub_depth);
    task.values = atom_integrals(q, alpha, atom, task.n_maxes);
  });

  for (int N : cfg.levels)
    for (std::size_t f = 0; f < cfg.n_max_factors.size(); ++f) {
      Theorem1Row best{N, cfg.n_max_factors[f] * gen.ladder(N), 0, -1.0};
      for (const auto& task : tasks) {
        if (task.N != N) continue;
        const Theorem1Row row{N, task.n_maxes[f], task.seed, task.values[f]};
        rep.table.push_back(row);
        if (row.value > best.value) best = row;
      }
      rep.maxima.push_back(best);
      rep.max_value = std::max(rep.max_value, best.value);
    }
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<StrongSum> strong_sum_sequence(const WeightSequence& q, double alpha, const StepFunction& f,
                                           const std::vector<std::int64_t>& ns) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be > 0");
  if (ns.empty()) return {};
  for (auto n : ns)
    if (n < 2) throw DomainError("strong sums need n >= 2");
  const std::int64_t top = *std::max_element(ns.begin(), ns.end());
  const double p = 1.0 / (1.0 + alpha);
  const double hardy_f = hardy_integral(f, p);
  const SpectralEngine engine(f);

  std::vector<double> lp(static_cast<std::size_t>(top) + 1, 0.0), hp(static_cast<std::size_t>(top) + 1, 0.0);
  std::vector<std::int64_t> skipped(static_cast<std::size_t>(top) + 1, 0);
  parallel_for(top, [&](std::int64_t idx) {
    const std::int64_t k = idx + 1;
    if (!(q.Q(k) > 0.0)) {
      skipped[static_cast<std::size_t>(k)] = 1;
      return;
    }
    const auto t = mean_from_engine(q, k, engine);
    lp[static_cast<std::size_t>(k)] = lp_integral(t, p) / static_cast<double>(k);
    hp[static_cast<std::size_t>(k)] = hardy_integral(t, p) / static_cast<double>(k);
  });

  std::vector<StrongSum> out;
  for (auto n : ns) {
    StrongSum s{n, 0.0, 0.0, hardy_f, 0.0, 0};
    for (std::int64_t k = 1; k <= n; ++k) {
      s.value += lp[static_cast<std::size_t>(k)];
      s.hardy_value += hp[static_cast<std::size_t>(k)];
      s.skipped += skipped[static_cast<std::size_t>(k)];
    }
    s.value /= log2_of(n);
    s.hardy_value /= log2_of(n);
    s.ratio = hardy_f > 0.0 ? s.value / hardy_f : (s.value == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    out.push_back(s);
  }
  return out;
}

StrongSum strong_sum(const WeightSequence& q, double alpha, const StepFunction& f, std::int64_t n) {
  return strong_sum_sequence(q, alpha, f, {n}).front();
}

std::vector<BackgroundSums> background_sums(const StepFunction& f, double p, std::int64_t n_max) {
  if (!(p > 0.0) || p > 1.0) throw DomainError("background sums need 0 < p <= 1");
  if (n_max < 2) throw DomainError("background sums need n >= 2");
  const SpectralEngine engine(f);
  const std::int64_t M = f.size();
  const double f_lp = lp_integral(f, p);
  const double simon_power = std::floor(p);
  const double fejer_power = std::floor(0.5 + p);

  std::vector<BackgroundSums> out;
  double simon = 0.0, fejer = 0.0, gat = 0.0;
  for (std::int64_t k = 1; k <= n_max; ++k) {
    const double kd = static_cast<double>(k);
    double sk_lp = f_lp, gap = 0.0;
    if (k < M) {
      const auto sk = engine.apply([](std::int64_t) { return 1.0; }, k);
      sk_lp = lp_integral(sk, p);
      auto diff = sk;
      diff -= f;
      gap = lp_integral(diff, 1.0);
    }
    const auto sigma = engine.apply([&](std::int64_t j) { return static_cast<double>(k - j) / kd; }, k);
    simon += sk_lp / std::pow(kd, 2.0 - p);
    fejer += lp_integral(sigma, p) / std::pow(kd, 2.0 - 2.0 * p);
    gat += gap / kd;
    if (k >= 2) {
      const double l = log2_of(k);
      out.push_back({k, simon / std::pow(l, simon_power), fejer / std::pow(l, fejer_power), gat / l});
    }
  }
  return out;
}

}  // namespace vilenkin
