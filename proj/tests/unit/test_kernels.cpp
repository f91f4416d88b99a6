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

#include <doctest.h>

#include <cmath>
#include <cstring>

#include "oracles.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/kernels.hpp"

using namespace vilenkin;

namespace {

std::vector<int> radices(const GeneratorSequence& g) { return {g.radices().begin(), g.radices().end()}; }

std::vector<Complex> oracle_norlund(const WeightSequence& q, const GeneratorSequence& g, std::int64_t n, int N) {
  std::vector<Complex> out(static_cast<std::size_t>(g.ladder(N)));
  for (std::int64_t k = 1; k <= n; ++k) {
    const auto d = oracle::dirichlet(radices(g), k, N);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += q.q(n - k) * d[i];
  }
  return out;
}

}  // namespace

TEST_CASE("kernel resolution") {
  const auto g = GeneratorSequence::parse("2,3,2");
  CHECK(kernel_resolution(g, 1) == 1);
  CHECK(kernel_resolution(g, 2) == 2);
  CHECK(kernel_resolution(g, 5) == 2);
  CHECK(kernel_resolution(g, 6) == 3);
  CHECK(kernel_resolution(g, 12) == 3);
  CHECK(walsh_up_to(GeneratorSequence::parse("2,2,3"), 2));
  CHECK_FALSE(walsh_up_to(GeneratorSequence::parse("2,2,3"), 3));
}

TEST_CASE("Dirichlet kernels against the brute-force sum") {
  for (const char* spec : {"2,2,2,2", "2,3,2", "3,3,2"}) {
    const auto g = GeneratorSequence::parse(spec);
    const int N = g.depth();
    for (std::int64_t n = 0; n <= g.ladder(N); ++n)
      CHECK(oracle::max_dev(dirichlet(g, n, N), oracle::dirichlet(radices(g), n, N)) < 1e-12);
  }
  const auto w = GeneratorSequence::walsh(4);
  for (std::int64_t n = 0; n <= 16; ++n) CHECK(oracle::max_dev(dirichlet_exact(w, n, 4), dirichlet(w, n, 4)) == 0.0);
  CHECK_THROWS_AS(dirichlet(w, 17, 4), ResolutionError);
  CHECK_THROWS_AS(dirichlet(w, 5, 2), ResolutionError);
}

TEST_CASE("Dirichlet closed forms") {
  const auto g = GeneratorSequence::parse("2,3,2");
  for (int n = 0; n <= 3; ++n) {
    const auto d = dirichlet_ladder_form<Complex>(g, n, 3);
    const auto ref = oracle::dirichlet(radices(g), g.ladder(n), 3);
    CHECK(oracle::max_dev(d, ref) < 1e-12);
  }
  for (const char* spec : {"2,2,2,2", "2,3,2,3", "3,3,2"}) {
    const auto gen = GeneratorSequence::parse(spec);
    for (int N = 1; N <= gen.depth(); ++N) {
      const auto reps = dirichlet_closed_forms(gen, N);
      CHECK(reps.size() == 4);
      for (const auto& r : reps) {
        CHECK(r.passed);
        CHECK(r.exact == walsh_up_to(gen, N));
      }
    }
  }
}

TEST_CASE("Fejer kernels") {
  const auto w = GeneratorSequence::walsh(3);
  const auto k4 = fejer(w, 4, 3);
  const double expected[8] = {2.5, 2.5, 1, 1, 0.5, 0.5, 0, 0};
  for (int i = 0; i < 8; ++i) CHECK(k4[i] == Complex(expected[i], 0.0));

  const auto g = GeneratorSequence::parse("3,2,3");
  for (std::int64_t n = 1; n <= 18; ++n) {
    std::vector<Complex> ref(18);
    for (std::int64_t k = 1; k <= n; ++k) {
      const auto d = oracle::dirichlet(radices(g), k, 3);
      for (std::size_t i = 0; i < 18; ++i) ref[i] += d[i] / static_cast<double>(n);
    }
    CHECK(oracle::max_dev(fejer(g, n, 3), ref) < 1e-12);
  }
  for (int n = 0; n <= 3; ++n) CHECK(max_abs_deviation(fejer_ladder_form(g, n, 3), fejer(g, g.ladder(n), 3)) < 1e-12);
  CHECK_THROWS_AS(fejer(g, 0, 3), DomainError);
}

TEST_CASE("Fejer branch classification") {
  const std::vector<int> center{0, 0, 1}, geo{0, 1, 0}, zero{1, 1, 0};
  int t = -1;
  CHECK(fejer_branch(center, 2) == FejerBranch::center);
  CHECK(fejer_branch(geo, 2, &t) == FejerBranch::geometric);
  CHECK(t == 1);
  CHECK(fejer_branch(zero, 2, &t) == FejerBranch::zero);
  CHECK(t == 0);
  const auto rep = fejer_closed_form_check(GeneratorSequence::walsh(4), 3, 4);
  CHECK(rep.passed);
  CHECK(rep.exact);
  CHECK(rep.details["center"]["cosets"] == 2);
}

TEST_CASE("Norlund kernels: direct, Abel and spectral routes") {
  const auto g = GeneratorSequence::parse("2,3,2");
  for (const char* spec : {"constant", "cesaro:0.5", "norlund_log", "inverse_sqrt"}) {
    const auto q = make_weights(spec, 12);
    for (std::int64_t n = 1; n <= 12; ++n) {
      const auto ref = oracle_norlund(q, g, n, 3);
      CHECK(oracle::max_dev(norlund_kernel_sum(q, g, n, 3), ref) < 1e-12);
      CHECK(max_abs_deviation(norlund_kernel_abel_sum(q, g, n, 3), norlund_kernel_sum(q, g, n, 3)) < 1e-12);
      CHECK(std::abs(abel_weight_sum(q, n) - q.Q(n)) < 1e-12);
      if (q.Q(n) > 0.0) {
        const auto F = norlund_kernel(q, g, n, 3);
        CHECK(max_abs_deviation(F, norlund_kernel_projection(q, g, n, 3)) < 1e-12);
        CHECK(max_abs_deviation(F, norlund_kernel_abel(q, g, n, 3)) < 1e-12);
        CHECK(std::abs(F.integral() - Complex(1.0)) < 1e-12);
      } else {
        CHECK_THROWS_AS(norlund_kernel(q, g, n, 3), DegenerateWeightsError);
      }
    }
  }
}

TEST_CASE("Norlund kernel with constant weights is the Fejer kernel bit for bit") {
  const auto g = GeneratorSequence::parse("3,2,2");
  const auto q = make_weights("constant", 12);
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto a = norlund_kernel(q, g, n, 3), b = fejer(g, n, 3);
    CHECK(std::memcmp(a.values().data(), b.values().data(), sizeof(Complex) * 12) == 0);
  }
}

TEST_CASE("kernel projection is the conditional expectation") {
  const auto g = GeneratorSequence::parse("2,3,2,2");
  const auto q = make_weights("cesaro:0.5", 24);
  for (std::int64_t n = 7; n <= 24; ++n)
    CHECK(max_abs_deviation(norlund_kernel(q, g, n, 4).coarsen(2), norlund_kernel_projection(q, g, n, 2)) < 1e-12);
}

TEST_CASE("lemma2 decomposition") {
  const auto g = GeneratorSequence::parse("2,3,2");
  for (const char* spec : {"constant", "cesaro:0.5", "norlund_log"}) {
    const auto q = make_weights(spec, 12);
    for (int n = 0; n < 3; ++n)
      for (int s = 1; s < g.radix(n); ++s)
        for (std::int64_t r = s * g.ladder(n) + 1; r <= (s + 1) * g.ladder(n); ++r) {
          const auto res = lemma2_decomposition(q, g, r, n, s, 3);
          CHECK(res.report.passed);
          CHECK(oracle::max_dev(res.lhs, oracle_norlund(q, g, r, 3)) < 1e-12);
        }
    CHECK_THROWS_AS(lemma2_decomposition(q, g, 5, 1, 1, 3), RangeError);
    CHECK_THROWS_AS(lemma2_decomposition(q, g, 5, 1, 3, 3), RangeError);
  }
  const auto w = GeneratorSequence::walsh(4);
  const auto exact = lemma2_decomposition(make_weights("cesaro:1", 16), w, 13, 3, 1, 4);
  CHECK(exact.report.exact);
  CHECK(exact.report.max_deviation == 0.0);
}

TEST_CASE("empirical constants for the kernel bounds") {
  const auto w = GeneratorSequence::walsh(5);
  const auto fm = fejer_majorant_constant(w, 32, 5);
  CHECK(fm.passed);
  CHECK(std::isfinite(*fm.empirical_constant));

  const auto l3 = lemma3_constant(make_weights("cesaro:0.5", 32), w, 0.5, 32, 5);
  CHECK(l3.passed);
  CHECK(l3.details["blocks"].size() == 6);
  CHECK_THROWS_AS(lemma3_constant(WeightSequence::custom(std::vector<double>(40, 1.0 / 3.0)), w, 1.0, 70, 5),
                  ResolutionError);
  std::vector<double> rising;
  for (int k = 0; k <= 32; ++k) rising.push_back(k + 1.0);
  CHECK_THROWS_AS(lemma3_constant(WeightSequence::custom(rising), w, 1.0, 32, 5), ContractError);

  const auto l4 = lemma4_integrals(make_weights("constant", 8), w, 1.0, 8, 2);
  CHECK(l4.passed);
  CHECK(l4.details["cosets"].size() == 3);  // one pair coset, two singles
  CHECK_THROWS_AS(lemma4_integrals(make_weights("constant", 8), w, 1.0, 3, 2), ContractError);
}
