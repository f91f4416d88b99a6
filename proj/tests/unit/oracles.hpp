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

// Brute-force references written from the definitions, sharing no code with
// the library beyond the GeneratorSequence container.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "vilenkin/random.hpp"
#include "vilenkin/step_function.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline std::vector<std::int64_t> ladder(const std::vector<int>& m) {
  std::vector<std::int64_t> M{1};
  for (int r : m) M.push_back(M.back() * r);
  return M;
}

// Digits x_0..x_{N-1} of the rank-N coset with lexicographic index i (digit 0 slowest).
inline std::vector<int> coset_digits(const std::vector<int>& m, int N, std::int64_t i) {
  std::vector<int> x(static_cast<std::size_t>(N));
  for (int k = N - 1; k >= 0; --k) {
    x[static_cast<std::size_t>(k)] = static_cast<int>(i % m[static_cast<std::size_t>(k)]);
    i /= m[static_cast<std::size_t>(k)];
  }
  return x;
}

// psi_n(x) = exp(2 pi i sum n_k x_k / m_k) with n = sum n_k M_k.
inline Complex character(const std::vector<int>& m, std::int64_t n, const std::vector<int>& x) {
  double turns = 0.0;
  for (std::size_t k = 0; k < m.size() && n > 0; ++k) {
    const int nk = static_cast<int>(n % m[k]);
    n /= m[k];
    if (k < x.size()) turns += static_cast<double>(nk * x[k] % m[k]) / m[k];
  }
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

inline std::vector<Complex> dirichlet(const std::vector<int>& m, std::int64_t n, int N) {
  const auto M = ladder(m);
  std::vector<Complex> out(static_cast<std::size_t>(M[static_cast<std::size_t>(N)]));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto x = coset_digits(m, N, static_cast<std::int64_t>(i));
    for (std::int64_t k = 0; k < n; ++k) out[i] += character(m, k, x);
  }
  return out;
}

inline std::vector<Complex> fourier(const std::vector<int>& m, int N, const std::vector<Complex>& f) {
  const std::size_t size = f.size();
  std::vector<Complex> out(size);
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t i = 0; i < size; ++i)
      out[j] += f[i] * std::conj(character(m, static_cast<std::int64_t>(j), coset_digits(m, N, static_cast<std::int64_t>(i))));
  for (auto& c : out) c /= static_cast<double>(size);
  return out;
}

inline vilenkin::StepFunction random_function(const vilenkin::GeneratorSequence& gen, int N, std::uint64_t seed,
                                              bool complex_values = true) {
  vilenkin::SplitMix64 rng(seed);
  auto f = vilenkin::StepFunction::zeros(gen, N);
  for (std::int64_t i = 0; i < f.size(); ++i)
    f[i] = Complex(rng.uniform(-1.0, 1.0), complex_values ? rng.uniform(-1.0, 1.0) : 0.0);
  return f;
}

template <class A, class B>
double max_dev(const A& a, const B& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.size()); ++i)
    d = std::max(d, std::abs(Complex(a[i]) - Complex(b[i])));
  return d;
}

}  // namespace oracle
