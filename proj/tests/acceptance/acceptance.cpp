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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "vilenkin/analysis.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/random.hpp"
#include "vilenkin/verify.hpp"
#include "vilenkin/weights.hpp"

using namespace vilenkin;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Summary of a suite: pass flag, worst deviation, first failure.
Outcome suite_outcome(const SuiteResult& r, double seconds, double limit) {
  double worst = 0.0;
  bool exact_ok = true;
  for (const auto& rep : r.reports) {
    if (rep.max_deviation) worst = std::max(worst, *rep.max_deviation);
    if (rep.exact && rep.max_deviation && *rep.max_deviation != 0.0) exact_ok = false;
  }
  std::ostringstream os;
  os << r.reports.size() << " reports, max deviation " << fmt("%.3g", worst) << ", " << fmt("%.2f", seconds) << " s";
  if (const auto* bad = r.first_failure()) os << "; first failure " << bad->identity << " " << bad->parameters.dump();
  if (seconds >= limit) os << "; over the " << limit << " s budget";
  return {r.passed() && exact_ok && seconds < limit, os.str()};
}

template <class Fn>
double timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

StepFunction random_function(const GeneratorSequence& g, int N, SplitMix64& rng, bool complex_values) {
  auto f = StepFunction::zeros(g, N);
  for (std::int64_t i = 0; i < f.size(); ++i)
    f[i] = Complex(rng.uniform(-1.0, 1.0), complex_values ? rng.uniform(-1.0, 1.0) : 0.0);
  return f;
}

Outcome criterion1() {
  SuiteResult r;
  const double s = timed([&] { r = run_suite("closed-forms"); });
  return suite_outcome(r, s, 10.0);
}

Outcome criterion2() {
  SuiteResult r;
  const double s = timed([&] { r = run_suite("lemma2"); });
  return suite_outcome(r, s, 30.0);
}

Outcome criterion3() {
  SuiteResult r;
  const double s = timed([&] { r = run_suite("abel"); });
  return suite_outcome(r, s, 1e9);
}

Outcome criterion4() {
  double fast_dev = 0.0, parseval = 0.0, round_trip = 0.0;
  int inputs = 0;
  for (const char* spec : {"2,2,2,2", "2,3,2,3", "3,3,2"}) {
    const auto g = GeneratorSequence::parse(spec);
    SplitMix64 rng(2024);
    for (int t = 0; t < 100; ++t, ++inputs) {
      const auto f = random_function(g, g.depth(), rng, true);
      const auto s = analyze(f);
      fast_dev = std::max(fast_dev, max_abs_deviation(s, analyze_direct(f)));
      fast_dev = std::max(fast_dev, max_abs_deviation(synthesize(s), synthesize_direct(s)));
      double e = 0.0, es = 0.0;
      for (const auto& v : f.values()) e += std::norm(v);
      for (const auto& c : s.coefficients()) es += std::norm(c);
      parseval = std::max(parseval, std::abs(e / static_cast<double>(f.size()) - es));
      round_trip = std::max(round_trip, max_abs_deviation(synthesize(s), f));
    }
  }
  std::ostringstream os;
  os << inputs << " inputs; fast vs direct " << fmt("%.3g", fast_dev) << ", Parseval " << fmt("%.3g", parseval)
     << ", round trip " << fmt("%.3g", round_trip);
  return {fast_dev < 1e-10 && parseval < 1e-10 && round_trip < 1e-10, os.str()};
}

Outcome criterion5() {
  const auto walsh = GeneratorSequence::walsh(5);
  const auto mixed = GeneratorSequence::parse("2,3,2,3,2");
  const char* families[] = {"constant", "cesaro:0.5", "norlund_log", "inverse_sqrt"};
  int atoms = 0, exact_atoms = 0, bad_invariants = 0, nonzero_walsh = 0;
  double mixed_dev = 0.0;
  SplitMix64 seeds(5);
  for (int i = 0; i < 1000; ++i, ++atoms) {
    const bool is_walsh = i % 2 == 0;
    const auto& g = is_walsh ? walsh : mixed;
    const int N = 1 + (i / 2) % 3;
    const double p = (i / 6) % 2 ? 2.0 / 3.0 : 0.5;
    const auto profile = i % 10 == 0 ? AtomProfile::haar : AtomProfile::random;
    const auto atom = make_atom(g, p, N, profile, seeds.next());
    if (!check_atom(atom).passed) ++bad_invariants;
    const auto q = make_weights(families[i % 4], g.ladder(N));
    for (std::int64_t n = 1; n <= g.ladder(N); ++n) {
      if (!(q.Q(n) > 0.0)) continue;
      for (auto path : {MeanPath::spectral, MeanPath::partial_sums}) {
        const auto t = norlund_mean(q, n, atom.function, path);
        if (is_walsh) {
          for (const auto& v : t.values())
            if (v != Complex{}) ++nonzero_walsh;
        } else {
          mixed_dev = std::max(mixed_dev, sup_norm(t));
        }
      }
    }
    exact_atoms += is_walsh;
  }
  std::ostringstream os;
  os << atoms << " atoms (" << exact_atoms << " Walsh, exact); invariant failures " << bad_invariants
     << ", nonzero Walsh values " << nonzero_walsh << ", max |t_n a| otherwise " << fmt("%.3g", mixed_dev);
  return {bad_invariants == 0 && nonzero_walsh == 0 && mixed_dev < 1e-10, os.str()};
}

Outcome criterion6() {
  struct Family {
    const char* weights;
    double alpha, p;
  };
  bool ok = true;
  std::ostringstream os;
  const double seconds = timed([&] {
    for (const Family fam : {Family{"constant", 1.0, 0.5}, Family{"cesaro:0.5", 0.5, 2.0 / 3.0}}) {
      Theorem1Config cfg;
      cfg.generator = GeneratorSequence::walsh(6);
      cfg.levels = {1, 2, 3};
      cfg.n_max_factors = {2, 4, 8};
      cfg.atoms = 20;
      cfg.seed = 7;
      cfg.p = fam.p;
      const auto q = make_weights(fam.weights, 4096);
      const auto rep = theorem1_experiment(q, fam.alpha, cfg);
      std::map<int, std::map<std::int64_t, double>> m;
      for (const auto& r : rep.maxima) m[r.N][r.n_max / cfg.generator.ladder(r.N)] = r.value;
      double level_max[4] = {0, 0, 0, 0};
      os << fam.weights << ":";
      for (int N : cfg.levels) {
        const double e4 = m[N][4], e8 = m[N][8];
        ok = ok && e8 <= 1.05 * e4;
        for (auto& [f, v] : m[N]) level_max[N] = std::max(level_max[N], v);
        os << " N=" << N << " [" << fmt("%.4g", m[N][2]) << "," << fmt("%.4g", e4) << "," << fmt("%.4g", e8) << "]";
      }
      ok = ok && level_max[3] <= 2.0 * level_max[1];
      ok = ok && rep.warnings.empty();
      for (const auto& w : rep.warnings) os << " warning: " << w;
      os << "; ";
    }
  });
  ok = ok && seconds < 300.0;
  os << fmt("%.2f", seconds) << " s";
  return {ok, os.str()};
}

Outcome criterion7() {
  struct Family {
    const char* weights;
    double alpha;
  };
  const auto g = GeneratorSequence::walsh(6);
  const std::vector<std::int64_t> ns{g.ladder(3), g.ladder(4), g.ladder(5)};
  bool ok = true;
  std::ostringstream os;
  for (const Family fam : {Family{"constant", 1.0}, Family{"cesaro:0.5", 0.5}}) {
    const auto q = make_weights(fam.weights, ns.back());
    double worst = 1.0;
    for (auto seed : atom_seeds(11, 1, 20)) {
      const auto atom = make_atom(g, 1.0 / (1.0 + fam.alpha), 1, AtomProfile::random, seed);
      const auto sums = strong_sum_sequence(q, fam.alpha, atom.function, ns);
      double lo = sums.front().ratio, hi = lo;
      for (const auto& s : sums) lo = std::min(lo, s.ratio), hi = std::max(hi, s.ratio);
      const double spread = lo > 0.0 ? hi / lo : INFINITY;
      worst = std::max(worst, spread);
    }
    ok = ok && worst <= 2.0;
    os << fam.weights << " worst max/min ratio " << fmt("%.4f", worst) << "; ";
  }
  return {ok, os.str()};
}

Outcome criterion8() {
  const std::vector<double> alphas{0.25, 0.75};
  const auto r = remark1_experiment(alphas, std::int64_t{1} << 16);
  const auto& a = r.rows[0];
  const auto& b = r.rows[1];
  bool ok = a.condition_6a.verdict == Verdict::satisfied && a.condition_7a.verdict == Verdict::violated &&
            b.condition_6a.verdict == Verdict::violated && b.condition_7a.verdict == Verdict::satisfied;
  std::ostringstream os;
  os << "alpha=0.25 (" << to_string(a.condition_6a.verdict) << ", " << to_string(a.condition_7a.verdict)
     << "), alpha=0.75 (" << to_string(b.condition_6a.verdict) << ", " << to_string(b.condition_7a.verdict)
     << "); 7a growth at 0.25:";
  for (double gr : a.condition_7a.growth) {
    ok = ok && gr >= 1.1 && gr <= 1.3;
    os << " " << fmt("%.4f", gr);
  }
  ok = ok && !a.condition_7a.growth.empty();
  return {ok, os.str()};
}

Outcome criterion9() {
  const auto g = GeneratorSequence::walsh(6);
  bool ok = true;
  std::ostringstream os;
  for (const auto& [spec, alpha] : std::vector<std::pair<const char*, double>>{{"constant", 1.0}, {"cesaro:0.5", 0.5}}) {
    const auto q = make_weights(spec, 64);
    const auto rep = lemma3_constant(q, g, alpha, 64, 6);
    double b3 = 0.0, b4 = 0.0;
    for (const auto& b : rep.details["blocks"]) {
      if (b["first"] == 8) b3 = b["sup"].get<double>();
      if (b["first"] == 16) b4 = b["sup"].get<double>();
    }
    ok = ok && rep.passed && b3 > 0.0 && b4 <= 1.1 * b3;
    os << spec << " lemma3 block sups " << fmt("%.4f", b3) << " -> " << fmt("%.4f", b4) << " (factor "
       << fmt("%.4f", b4 / b3) << ", later blocks";
    // Context only: the sups of the following blocks on a deeper group.
    const auto deep = GeneratorSequence::walsh(9);
    const auto tail = lemma3_constant(make_weights(spec, 512), deep, alpha, 512, 9);
    for (const auto& b : tail.details["blocks"])
      if (b["complete"].get<bool>() && b["first"].get<std::int64_t>() >= 32) os << " " << fmt("%.4f", b["sup"].get<double>());
    os << "); ";
  }
  const auto l4 = run_suite("lemma4");
  double worst = 0.0;
  for (const auto& r : l4.reports) {
    ok = ok && r.passed && r.empirical_constant && std::isfinite(*r.empirical_constant);
    if (r.empirical_constant) worst = std::max(worst, *r.empirical_constant);
  }
  os << "lemma4 " << l4.reports.size() << " sweeps, max ratio " << fmt("%.4f", worst);
  return {ok, os.str()};
}

Outcome criterion10() {
  const auto g = GeneratorSequence::walsh(3);
  const std::int64_t top = std::int64_t{1} << 12;
  std::vector<StepFunction> fs{character_function(g, 1, 3)};
  SplitMix64 rng(10);
  for (int i = 0; i < 10; ++i) {
    auto f = StepFunction::zeros(g, 3);
    for (std::int64_t j = 0; j < f.size(); ++j) f[j] = rng.uniform();
    fs.push_back(f);
  }
  bool ok = true;
  double worst_end = 0.0;
  int increases = 0;
  for (const auto& f : fs) {
    const auto sums = background_sums(f, 1.0, top);
    double prev = INFINITY;
    for (const auto& s : sums) {
      if (s.n < g.ladder(3)) continue;
      if (s.gat > prev) ++increases;
      prev = s.gat;
    }
    worst_end = std::max(worst_end, sums.back().gat);
  }
  ok = increases == 0 && worst_end < 0.1;
  std::ostringstream os;
  os << fs.size() << " functions; increases after M_3: " << increases << ", max value at n=4096 " << fmt("%.4f", worst_end);
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"closed-form kernel identities", criterion1},
      {"lemma2 identity", criterion2},
      {"Abel form and scalar identity", criterion3},
      {"transform correctness", criterion4},
      {"atom null property", criterion5},
      {"atom experiment boundedness", criterion6},
      {"strong summation ratios", criterion7},
      {"inverse square root weights", criterion8},
      {"lemma3/lemma4 empirical constants", criterion9},
      {"strong convergence probe", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::printf("%s criterion %zu (%s): %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
