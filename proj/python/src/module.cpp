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


// Python bindings. Step function values cross the boundary as numpy arrays;
// reports cross as plain dicts.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vilenkin/analysis.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/verify.hpp"
#include "vilenkin/weights.hpp"

namespace py = pybind11;
using namespace vilenkin;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::array_t<Complex> to_array(std::span<const Complex> v) {
  return py::array_t<Complex>(static_cast<py::ssize_t>(v.size()), v.data());
}

std::vector<Complex> from_array(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 1) throw StructuralError("values must be one-dimensional");
  return {a.data(), a.data() + a.size()};
}

MeanPath parse_path(const std::string& s) {
  if (s == "spectral") return MeanPath::spectral;
  if (s == "partial_sums") return MeanPath::partial_sums;
  if (s == "convolution") return MeanPath::convolution;
  throw RangeError("unknown mean path '" + s + "'");
}

ClassicalMean parse_classical(const std::string& s) {
  if (s == "fejer") return ClassicalMean::fejer;
  if (s == "cesaro") return ClassicalMean::cesaro;
  if (s == "riesz_log") return ClassicalMean::riesz_log;
  if (s == "norlund_log") return ClassicalMean::norlund_log;
  throw RangeError("unknown classical mean '" + s + "'");
}

AtomProfile parse_profile(const std::string& s) {
  if (s == "haar") return AtomProfile::haar;
  if (s == "random") return AtomProfile::random;
  throw RangeError("unknown atom profile '" + s + "'");
}

py::dict report_dict(const VerificationReport& r) { return to_py(r.to_json()); }

}  // namespace

PYBIND11_MODULE(_vilenkin, m) {
  m.doc() = "Vilenkin groups, Norlund kernels and summability means";

  auto base = py::register_exception<Error>(m, "VilenkinError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", base);
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<ResolutionError>(m, "ResolutionError", base);
  py::register_exception<DegenerateWeightsError>(m, "DegenerateWeightsError", base);
  py::register_exception<ContractError>(m, "ContractError", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<GeneratorSequence>(m, "Generator")
      .def(py::init<std::vector<int>>(), py::arg("radices"))
      .def_static("parse", &GeneratorSequence::parse, py::arg("text"))
      .def_static("walsh", &GeneratorSequence::walsh, py::arg("depth"))
      .def_property_readonly("depth", &GeneratorSequence::depth)
      .def_property_readonly("radices",
                             [](const GeneratorSequence& g) {
                               auto r = g.radices();
                               return std::vector<int>(r.begin(), r.end());
                             })
      .def("ladder", py::overload_cast<int>(&GeneratorSequence::ladder, py::const_), py::arg("n"))
      .def_property_readonly("is_walsh", &GeneratorSequence::is_walsh)
      .def("__eq__", [](const GeneratorSequence& a, const GeneratorSequence& b) { return a == b; })
      .def("__repr__", [](const GeneratorSequence& g) { return "Generator(" + g.to_string() + ")"; });

  py::class_<StepFunction>(m, "StepFunction")
      .def(py::init([](const GeneratorSequence& gen, int resolution,
                       const py::array_t<Complex, py::array::c_style | py::array::forcecast>& values) {
             return StepFunction(gen, resolution, from_array(values));
           }),
           py::arg("generator"), py::arg("resolution"), py::arg("values"))
      .def_property_readonly("generator", &StepFunction::generator)
      .def_property_readonly("resolution", &StepFunction::resolution)
      .def_property_readonly("values", [](const StepFunction& f) { return to_array(f.values()); })
      .def("__len__", &StepFunction::size)
      .def("integral", &StepFunction::integral)
      .def("refine", &StepFunction::refine, py::arg("resolution"))
      .def("coarsen", &StepFunction::coarsen, py::arg("resolution"))
      .def("conj", &StepFunction::conj)
      .def("__add__", [](const StepFunction& a, const StepFunction& b) { return a + b; })
      .def("__sub__", [](const StepFunction& a, const StepFunction& b) { return a - b; })
      .def("__mul__", [](const StepFunction& a, const StepFunction& b) { return a * b; })
      .def("__mul__", [](const StepFunction& a, Complex c) { return c * a; })
      .def("__rmul__", [](const StepFunction& a, Complex c) { return c * a; })
      .def("__repr__", [](const StepFunction& f) {
        return "StepFunction(" + f.generator().to_string() + ", resolution=" + std::to_string(f.resolution()) + ")";
      });

  py::class_<Spectrum>(m, "Spectrum")
      .def(py::init([](const GeneratorSequence& gen, int resolution,
                       const py::array_t<Complex, py::array::c_style | py::array::forcecast>& coefficients) {
             return Spectrum(gen, resolution, from_array(coefficients));
           }),
           py::arg("generator"), py::arg("resolution"), py::arg("coefficients"))
      .def_property_readonly("generator", &Spectrum::generator)
      .def_property_readonly("resolution", &Spectrum::resolution)
      .def_property_readonly("coefficients", [](const Spectrum& s) { return to_array(s.coefficients()); })
      .def("__len__", &Spectrum::size);

  m.def("character", &character_function, py::arg("generator"), py::arg("n"), py::arg("resolution"));
  m.def("analyze", &analyze, py::arg("f"));
  m.def("synthesize", &synthesize, py::arg("spectrum"));
  m.def("partial_sum", &partial_sum, py::arg("f"), py::arg("n"));
  m.def("convolve", &convolve_fast, py::arg("f"), py::arg("g"));

  py::class_<WeightSequence>(m, "Weights")
      .def_property_readonly("label", &WeightSequence::label)
      .def_property_readonly("n_max", &WeightSequence::n_max)
      .def_property_readonly("non_increasing", &WeightSequence::non_increasing)
      .def_property_readonly("values",
                             [](const WeightSequence& q) {
                               auto v = q.values();
                               return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
                             })
      .def("q", &WeightSequence::q, py::arg("k"))
      .def("Q", &WeightSequence::Q, py::arg("n"))
      .def("__repr__", [](const WeightSequence& q) { return "Weights(" + q.label() + ")"; });
  m.def("make_weights", &make_weights, py::arg("spec"), py::arg("n_max"));
  m.def("custom_weights", &WeightSequence::custom, py::arg("values"), py::arg("label") = "custom");
  m.def(
      "check_6a", [](const WeightSequence& q, double alpha, std::int64_t n_max) { return to_py(check_6a(q, alpha, n_max).to_json()); },
      py::arg("weights"), py::arg("alpha"), py::arg("n_max"));
  m.def(
      "check_7a", [](const WeightSequence& q, double alpha, std::int64_t n_max) { return to_py(check_7a(q, alpha, n_max).to_json()); },
      py::arg("weights"), py::arg("alpha"), py::arg("n_max"));
  m.def(
      "check_regularity",
      [](const WeightSequence& q, std::int64_t n_max) { return to_py(check_regularity(q, n_max).to_json()); },
      py::arg("weights"), py::arg("n_max"));

  m.def("kernel_resolution", &kernel_resolution, py::arg("generator"), py::arg("n"));
  m.def("dirichlet", &dirichlet, py::arg("generator"), py::arg("n"), py::arg("resolution"));
  m.def("fejer", &fejer, py::arg("generator"), py::arg("n"), py::arg("resolution"));
  m.def("norlund_kernel", &norlund_kernel, py::arg("weights"), py::arg("generator"), py::arg("n"),
        py::arg("resolution"));
  m.def(
      "lemma2",
      [](const WeightSequence& q, const GeneratorSequence& gen, std::int64_t r, int n, int s, int resolution) {
        return report_dict(lemma2_decomposition(q, gen, r, n, s, resolution).report);
      },
      py::arg("weights"), py::arg("generator"), py::arg("r"), py::arg("n"), py::arg("s"), py::arg("resolution"));

  m.def(
      "norlund_mean",
      [](const WeightSequence& q, std::int64_t n, const StepFunction& f, const std::string& path) {
        return norlund_mean(q, n, f, parse_path(path));
      },
      py::arg("weights"), py::arg("n"), py::arg("f"), py::arg("path") = "spectral");
  m.def(
      "classical_mean",
      [](const std::string& kind, std::int64_t n, const StepFunction& f, double alpha) {
        return classical_mean(parse_classical(kind), n, f, alpha);
      },
      py::arg("kind"), py::arg("n"), py::arg("f"), py::arg("alpha") = 1.0);

  m.def("lp_quasinorm", &lp_quasinorm, py::arg("f"), py::arg("p"));
  m.def("weak_lp", &weak_lp, py::arg("f"), py::arg("p"));
  m.def("hardy_norm", &hardy_norm, py::arg("f"), py::arg("p"));
  m.def(
      "martingale_maximal",
      [](const StepFunction& f) {
        auto v = martingale_maximal(f).values();
        return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
      },
      py::arg("f"));

  py::class_<Atom>(m, "Atom")
      .def_readonly("p", &Atom::p)
      .def_readonly("function", &Atom::function)
      .def_readonly("seed", &Atom::seed)
      .def_property_readonly("support_rank", [](const Atom& a) { return a.support.rank(); });
  m.def(
      "make_atom",
      [](const GeneratorSequence& gen, double p, int N, const std::string& profile, std::uint64_t seed, int sub_depth) {
        return make_atom(gen, p, N, parse_profile(profile), seed, sub_depth);
      },
      py::arg("generator"), py::arg("p"), py::arg("N"), py::arg("profile") = "random", py::arg("seed") = 0,
      py::arg("sub_depth") = 1);
  m.def(
      "check_atom", [](const Atom& a) { return report_dict(check_atom(a)); }, py::arg("atom"));

  m.def(
      "theorem1",
      [](const WeightSequence& q, double alpha, const GeneratorSequence& gen, std::vector<int> levels, int atoms,
         std::uint64_t seed, double p, const std::string& profile) {
        Theorem1Config cfg;
        cfg.generator = gen;
        cfg.levels = std::move(levels);
        cfg.atoms = atoms;
        cfg.seed = seed;
        cfg.p = p;
        cfg.profile = parse_profile(profile);
        return to_py(theorem1_experiment(q, alpha, cfg).to_json());
      },
      py::arg("weights"), py::arg("alpha"), py::arg("generator") = GeneratorSequence::walsh(6),
      py::arg("levels") = std::vector<int>{1, 2, 3}, py::arg("atoms") = 20, py::arg("seed") = 1, py::arg("p") = 0.5,
      py::arg("profile") = "random");

  m.def(
      "strong_sum",
      [](const WeightSequence& q, double alpha, const StepFunction& f, std::int64_t n) {
        const StrongSum s = strong_sum(q, alpha, f, n);
        py::dict d;
        d["n"] = s.n;
        d["value"] = s.value;
        d["hardy_value"] = s.hardy_value;
        d["hardy_f"] = s.hardy_f;
        d["ratio"] = s.ratio;
        d["skipped"] = s.skipped;
        return d;
      },
      py::arg("weights"), py::arg("alpha"), py::arg("f"), py::arg("n"));

  m.def(
      "background_sums",
      [](const StepFunction& f, double p, std::int64_t n_max) {
        py::list out;
        for (const auto& b : background_sums(f, p, n_max)) {
          py::dict d;
          d["n"] = b.n;
          d["simon"] = b.simon;
          d["fejer"] = b.fejer;
          d["gat"] = b.gat;
          out.append(d);
        }
        return out;
      },
      py::arg("f"), py::arg("p"), py::arg("n_max"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::vector<GeneratorSequence> generators, std::vector<std::string> weights,
         std::optional<std::int64_t> r_max, std::optional<double> alpha) {
        VerifyConfig cfg;
        cfg.generators = std::move(generators);
        cfg.weights = std::move(weights);
        cfg.r_max = r_max;
        cfg.alpha = alpha;
        SuiteResult res;
        {
          py::gil_scoped_release release;
          res = run_suite(name, cfg);
        }
        return to_py(res.to_json());
      },
      py::arg("name"), py::arg("generators") = std::vector<GeneratorSequence>{},
      py::arg("weights") = std::vector<std::string>{}, py::arg("r_max") = std::nullopt, py::arg("alpha") = std::nullopt);
}
