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

// vilenkin: kernels, transforms, verification suites and experiments on
// bounded Vilenkin groups.
//
// Exit codes: 0 success, 1 computation or verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vilenkin/analysis.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/io.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/verify.hpp"
#include "vilenkin/weights.hpp"

namespace fs = std::filesystem;
using namespace vilenkin;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GeneratorSequence parse_generator(const std::string& text) {
  try {
    return GeneratorSequence::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--m: ") + e.what());
  }
}

WeightSequence parse_weights(const std::string& spec, std::int64_t n_max) {
  try {
    return make_weights(spec, n_max);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--weights: ") + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int a = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {a, a};
    }
    const auto lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size() || b < a) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("--N expects a or a..b with a <= b, got '" + text + "'");
  }
}

// Either writes the named files under --out or prints the primary one.
struct Output {
  std::string dir;
  std::vector<std::pair<fs::path, std::string>> files;

  void add(const std::string& name, std::string content) { files.emplace_back(fs::path(dir) / name, std::move(content)); }
  void flush(std::size_t primary = 0) {
    if (dir.empty()) {
      if (primary < files.size()) std::cout << files[primary].second;
      return;
    }
    write_files(files);
  }
};

// ---- kernel ------------------------------------------------------------------

struct KernelArgs {
  std::string m, kind = "dirichlet", weights = "constant", format = "csv", out;
  std::int64_t n = 0;
  std::optional<int> resolution;
  bool spectrum = false;
};

int cmd_kernel(const KernelArgs& a) {
  const auto gen = parse_generator(a.m);
  const auto q = parse_weights(a.weights, a.n);
  const int N = a.resolution ? *a.resolution : kernel_resolution(gen, a.n);
  StepFunction k = a.kind == "dirichlet" ? dirichlet(gen, a.n, N)
                   : a.kind == "fejer"   ? fejer(gen, a.n, N)
                                         : norlund_kernel(q, gen, a.n, N);
  const std::string stem = "kernel_" + a.kind + "_n" + std::to_string(a.n);
  Output out{a.out, {}};
  if (a.format == "json") {
    nlohmann::json j{{"kind", a.kind}, {"m", gen.to_string()}, {"n", a.n}, {"resolution", N}};
    if (a.kind == "norlund") j["weights"] = q.label();
    auto rows = nlohmann::json::array();
    for (const auto& v : k.values()) rows.push_back({v.real(), v.imag()});
    j["values"] = rows;
    if (a.spectrum) {
      auto s = nlohmann::json::array();
      for (const auto& v : analyze(k).coefficients()) s.push_back({v.real(), v.imag()});
      j["spectrum"] = s;
    }
    out.add(stem + ".json", j.dump(2) + "\n");
  } else {
    out.add(stem + ".csv", step_function_csv(k));
    if (a.spectrum) out.add(stem + "_spectrum.csv", spectrum_csv(analyze(k)));
  }
  out.flush();
  return 0;
}

// ---- transform --------------------------------------------------------------

struct TransformArgs {
  std::string m, input, out, format = "csv";
  int resolution = 0;
};

int cmd_transform(const TransformArgs& a) {
  const auto gen = parse_generator(a.m);
  std::ifstream in(a.input);
  if (!in) throw UsageError("cannot open '" + a.input + "'");
  const auto f = read_step_function_csv(in, gen, a.resolution);
  Output out{a.out, {}};
  out.add("spectrum.csv", spectrum_csv(analyze(f)));
  out.flush();
  return 0;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite, m, weights, out, format = "json";
  std::optional<std::int64_t> r_max;
  std::optional<double> alpha;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyConfig cfg;
  if (!a.m.empty()) cfg.generators.push_back(parse_generator(a.m));
  if (!a.weights.empty()) {
    parse_weights(a.weights, 1);
    cfg.weights.push_back(a.weights);
  }
  cfg.r_max = a.r_max;
  cfg.alpha = a.alpha;
  const auto result = run_suite(a.suite, cfg);

  std::ostringstream summary;
  summary << "suite,identity,parameters,max_deviation,empirical_constant,passed\n";
  for (const auto& r : result.reports) {
    auto params = r.parameters.dump();
    std::string quoted;
    for (char c : params) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    summary << result.suite << ',' << r.identity << ",\"" << quoted << "\","
            << (r.max_deviation ? format_double(*r.max_deviation) : "") << ','
            << (r.empirical_constant ? format_double(*r.empirical_constant) : "") << ',' << (r.passed ? "true" : "false")
            << '\n';
  }
  Output out{a.out, {}};
  if (a.format == "json")
    out.add("verify_" + result.suite + ".json", result.to_json().dump(2) + "\n");
  else
    out.add("verify_" + result.suite + ".csv", summary.str());
  out.flush();

  if (const auto* bad = result.first_failure()) {
    std::cerr << "FAIL " << bad->identity << " " << bad->parameters.dump() << "\n  witness " << bad->argmax_witness.dump();
    if (bad->max_deviation) std::cerr << "\n  max_deviation " << format_double(*bad->max_deviation);
    for (const auto& v : bad->violations) std::cerr << "\n  " << v;
    std::cerr << "\n";
    return 1;
  }
  return 0;
}

// ---- experiment ---------------------------------------------------------------

struct ExperimentArgs {
  std::string kind = "theorem1", m = "2,2,2,2,2,2", weights = "constant", N = "1..3", out, format = "csv",
              profile = "random";
  std::optional<double> alpha, p;
  int atoms = 20;
  std::uint64_t seed = 1;
};

int cmd_experiment(const ExperimentArgs& a) {
  const auto gen = parse_generator(a.m);
  const auto [lo, hi] = parse_range(a.N);
  const double alpha = natural_alpha(a.weights, a.alpha);
  if (!(alpha > 0.0)) throw UsageError("--alpha must be > 0");
  const double p = a.p ? *a.p : 1.0 / (1.0 + alpha);
  const AtomProfile profile = a.profile == "haar" ? AtomProfile::haar : AtomProfile::random;
  std::vector<int> levels;
  for (int N = lo; N <= hi; ++N) levels.push_back(N);
  Output out{a.out, {}};

  if (a.kind == "theorem1") {
    Theorem1Config cfg;
    cfg.generator = gen;
    cfg.levels = levels;
    cfg.atoms = a.atoms;
    cfg.seed = a.seed;
    cfg.p = p;
    cfg.profile = profile;
    std::int64_t needed = 4096;
    for (int N : levels) needed = std::max(needed, 8 * gen.ladder(std::min(N, gen.depth())));
    const auto q = parse_weights(a.weights, needed + 1);
    const auto rep = theorem1_experiment(q, alpha, cfg);
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    std::ostringstream csv;
    csv << "N,n_max,atom_seed,value\n";
    for (const auto& r : rep.table) csv << r.N << ',' << r.n_max << ',' << r.atom_seed << ',' << format_double(r.value) << '\n';
    csv << "max,,," << format_double(rep.max_value) << '\n';
    if (a.format == "json") {
      out.add("theorem1.json", rep.to_json().dump(2) + "\n");
    } else {
      out.add("theorem1.csv", csv.str());
      out.add("theorem1.json", rep.to_json().dump(2) + "\n");
    }
    out.flush();
    return 0;
  }

  // theorem2 and strong-background sweep n over M_2..M_5 for atoms at each level.
  std::vector<std::int64_t> ns;
  for (int j = 2; j <= std::min(5, gen.depth()); ++j) ns.push_back(gen.ladder(j));
  const std::int64_t top = ns.back();
  const auto q = parse_weights(a.weights, top + 1);
  std::ostringstream csv;
  nlohmann::json rows = nlohmann::json::array();
  double max_value = 0.0;
  if (a.kind == "theorem2") {
    csv << "N,n_max,atom_seed,value\n";
    for (int N : levels)
      for (auto seed : atom_seeds(a.seed, N, a.atoms)) {
        const auto atom = make_atom(gen, p, N, profile, seed);
        for (const auto& s : strong_sum_sequence(q, alpha, atom.function, ns)) {
          csv << N << ',' << s.n << ',' << seed << ',' << format_double(s.ratio) << '\n';
          rows.push_back({{"N", N}, {"n_max", s.n}, {"atom_seed", seed}, {"value", s.ratio}, {"sum", s.value},
                          {"hardy_sum", s.hardy_value}, {"hardy_f", s.hardy_f}, {"skipped", s.skipped}});
          max_value = std::max(max_value, s.ratio);
        }
      }
  } else {
    csv << "N,n_max,atom_seed,simon,fejer,gat\n";
    for (int N : levels)
      for (auto seed : atom_seeds(a.seed, N, a.atoms)) {
        const auto atom = make_atom(gen, p, N, profile, seed);
        const auto sums = background_sums(atom.function, p, top);
        for (auto n : ns) {
          const auto& s = sums[static_cast<std::size_t>(n - 2)];
          csv << N << ',' << n << ',' << seed << ',' << format_double(s.simon) << ',' << format_double(s.fejer) << ','
              << format_double(s.gat) << '\n';
          rows.push_back({{"N", N}, {"n_max", n}, {"atom_seed", seed}, {"simon", s.simon}, {"fejer", s.fejer},
                          {"gat", s.gat}});
          max_value = std::max(max_value, s.fejer);
        }
      }
  }
  csv << "max,,," << format_double(max_value) << '\n';
  nlohmann::json summary{{"family", q.label()}, {"alpha", alpha}, {"p", p}, {"max_value", max_value}, {"table", rows}};
  const std::string stem = a.kind == "theorem2" ? "theorem2" : "strong_background";
  if (a.format == "json") {
    out.add(stem + ".json", summary.dump(2) + "\n");
  } else {
    out.add(stem + ".csv", csv.str());
    out.add(stem + ".json", summary.dump(2) + "\n");
  }
  out.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic analysis on bounded Vilenkin groups"};
  app.require_subcommand(1);

  KernelArgs ka;
  auto* kernel = app.add_subcommand("kernel", "Dirichlet, Fejer or Norlund kernel as a step function");
  kernel->add_option("--m", ka.m, "Radices, e.g. 2,3,2")->required();
  kernel->add_option("--kind", ka.kind)->check(CLI::IsMember({"dirichlet", "fejer", "norlund"}));
  kernel->add_option("--n", ka.n, "Kernel index")->required()->check(CLI::PositiveNumber);
  kernel->add_option("--weights", ka.weights, "Weight spec for --kind norlund");
  kernel->add_option("--resolution", ka.resolution, "Evaluation resolution (default order(n)+1, at most D)");
  kernel->add_flag("--spectrum", ka.spectrum, "Also write the spectrum");
  kernel->add_option("--format", ka.format)->check(CLI::IsMember({"csv", "json"}));
  kernel->add_option("--out", ka.out, "Output directory (default: standard output)");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Fourier coefficients of a step function CSV");
  transform->add_option("--m", ta.m)->required();
  transform->add_option("--resolution", ta.resolution)->required()->check(CLI::NonNegativeNumber);
  transform->add_option("--in", ta.input, "CSV with header coset_index,re,im")->required();
  transform->add_option("--out", ta.out);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", va.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--m", va.m);
  verify->add_option("--weights", va.weights);
  verify->add_option("--r-max", va.r_max)->check(CLI::PositiveNumber);
  verify->add_option("--alpha", va.alpha)->check(CLI::PositiveNumber);
  verify->add_option("--format", va.format)->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", va.out);

  ExperimentArgs ea;
  auto* experiment = app.add_subcommand("experiment", "Atom experiments and strong summation tables");
  experiment->add_option("--kind", ea.kind)->check(CLI::IsMember({"theorem1", "theorem2", "strong-background"}));
  experiment->add_option("--m", ea.m);
  experiment->add_option("--weights", ea.weights);
  experiment->add_option("--alpha", ea.alpha)->check(CLI::PositiveNumber);
  experiment->add_option("--p", ea.p)->check(CLI::Range(0.0, 1.0));
  experiment->add_option("--N", ea.N, "Atom levels a..b");
  experiment->add_option("--atoms", ea.atoms)->check(CLI::PositiveNumber);
  experiment->add_option("--seed", ea.seed);
  experiment->add_option("--profile", ea.profile)->check(CLI::IsMember({"haar", "random"}));
  experiment->add_option("--format", ea.format)->check(CLI::IsMember({"csv", "json"}));
  experiment->add_option("--out", ea.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*kernel) return cmd_kernel(ka);
    if (*transform) return cmd_transform(ta);
    if (*verify) return cmd_verify(va);
    return cmd_experiment(ea);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
