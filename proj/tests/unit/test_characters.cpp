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

#include "oracles.hpp"
#include "vilenkin/characters.hpp"
#include "vilenkin/error.hpp"

using namespace vilenkin;

namespace {
const char* kSequences[] = {"2,2,2,2", "2,3,2,3", "3,3,2", "5,2,3"};
}

TEST_CASE("characters match the exponential definition") {
  for (const char* spec : kSequences) {
    const auto g = GeneratorSequence::parse(spec);
    const std::vector<int> m(g.radices().begin(), g.radices().end());
    const int N = g.depth();
    for (std::int64_t n = 0; n < g.ladder(N); ++n) {
      const auto psi = character_function(g, n, N);
      double dev = 0.0;
      for (std::int64_t i = 0; i < psi.size(); ++i)
        dev = std::max(dev, std::abs(psi[i] - oracle::character(m, n, oracle::coset_digits(m, N, i))));
      CHECK(dev < 1e-12);
    }
  }
}

TEST_CASE("walsh characters are exactly +-1 and match the complex path") {
  const auto g = GeneratorSequence::walsh(5);
  for (std::int64_t n = 0; n < 32; ++n) {
    const auto w = walsh_character_function(g, n, 5);
    const auto c = character_function(g, n, 5);
    for (std::int64_t i = 0; i < 32; ++i) {
      CHECK((w[i] == 1 || w[i] == -1));
      CHECK(c[i] == Complex(static_cast<double>(w[i]), 0.0));
    }
  }
  CHECK_THROWS_AS(walsh_character_function(GeneratorSequence::parse("2,3"), 1, 2), Error);
}

TEST_CASE("characters are multiplicative and orthonormal") {
  const auto g = GeneratorSequence::parse("2,3,2");
  const CosetLayout layout(g, 3);
  for (std::int64_t n = 0; n < 12; ++n)
    for (std::int64_t a = 0; a < 12; ++a)
      for (std::int64_t b = 0; b < 12; ++b) {
        const auto x = layout.element(a), y = layout.element(b);
        CHECK(std::abs(character(n, x + y) - character(n, x) * character(n, y)) < 1e-12);
      }
  for (std::int64_t j = 0; j < 12; ++j)
    for (std::int64_t k = 0; k < 12; ++k) {
      auto prod = character_function(g, j, 3);
      prod *= character_function(g, k, 3).conj();
      CHECK(std::abs(prod.integral() - Complex(j == k ? 1.0 : 0.0)) < 1e-12);
    }
  CHECK(rademacher(1, GroupElement(g, {0, 1, 0})) == character(2, GroupElement(g, {0, 1, 0})));
}

TEST_CASE("fast transform equals the direct sum") {
  for (const char* spec : kSequences) {
    const auto g = GeneratorSequence::parse(spec);
    const std::vector<int> m(g.radices().begin(), g.radices().end());
    for (int N = 0; N <= g.depth(); ++N) {
      const auto f = oracle::random_function(g, N, 100 + static_cast<std::uint64_t>(N));
      const auto fast = analyze(f);
      const auto ref = oracle::fourier(m, N, std::vector<Complex>(f.values().begin(), f.values().end()));
      CHECK(oracle::max_dev(fast.coefficients(), ref) < 1e-12);
      CHECK(max_abs_deviation(fast, analyze_direct(f)) < 1e-12);
      CHECK(max_abs_deviation(synthesize(fast), f) < 1e-12);
      CHECK(max_abs_deviation(synthesize_direct(fast), f) < 1e-12);
      double energy = 0.0, spectral = 0.0;
      for (const auto& v : f.values()) energy += std::norm(v);
      for (const auto& c : fast.coefficients()) spectral += std::norm(c);
      CHECK(std::abs(energy / static_cast<double>(f.size()) - spectral) < 1e-12);
    }
  }
}

TEST_CASE("integer walsh transform") {
  const auto g = GeneratorSequence::walsh(4);
  SplitMix64 rng(3);
  auto f = ExactStepFunction::zeros(g, 4);
  for (std::int64_t i = 0; i < 16; ++i) f[i] = static_cast<std::int64_t>(rng.next() % 21) - 10;
  const auto s = analyze_exact(f);
  const auto c = analyze(to_complex(f));
  for (std::int64_t k = 0; k < 16; ++k) CHECK(static_cast<double>(s.scaled[static_cast<std::size_t>(k)]) == doctest::Approx(16.0 * c[k].real()));
  const auto back = synthesize_exact(s);
  for (std::int64_t i = 0; i < 16; ++i) CHECK(back[i] == f[i]);
  auto odd = s;
  odd.scaled[0] += 1;
  CHECK_THROWS_AS(synthesize_exact(odd), DomainError);
}

TEST_CASE("partial sums") {
  const auto g = GeneratorSequence::parse("2,3,2");
  const std::vector<int> m{2, 3, 2};
  const auto f = oracle::random_function(g, 3, 9);
  const auto fhat = oracle::fourier(m, 3, std::vector<Complex>(f.values().begin(), f.values().end()));
  for (std::int64_t n = 0; n <= 12; ++n) {
    const auto s = partial_sum(f, n);
    double dev = 0.0;
    for (std::int64_t i = 0; i < 12; ++i) {
      Complex ref{};
      for (std::int64_t k = 0; k < n; ++k) ref += fhat[static_cast<std::size_t>(k)] * oracle::character(m, k, oracle::coset_digits(m, 3, i));
      dev = std::max(dev, std::abs(ref - s[i]));
    }
    CHECK(dev < 1e-12);
  }
  CHECK(max_abs_deviation(partial_sum(f, 12), f) < 1e-12);
  CHECK(sup_norm(partial_sum(f, 0)) == 0.0);
  CHECK_THROWS_AS(partial_sum(f, 13), ResolutionError);
}

TEST_CASE("convolution: definition, spectrum and Dirichlet kernels") {
  const auto g = GeneratorSequence::parse("3,2,2");
  const auto f = oracle::random_function(g, 3, 1);
  const auto h = oracle::random_function(g, 3, 2);
  CHECK(max_abs_deviation(convolve(f, h), convolve_fast(f, h)) < 1e-12);
  const std::vector<int> m{3, 2, 2};
  for (std::int64_t n = 0; n <= 12; ++n) {
    const auto d = oracle::dirichlet(m, n, 3);
    const StepFunction dn(g, 3, d);
    CHECK(max_abs_deviation(convolve(f, dn), partial_sum(f, n)) < 1e-12);
  }
}
