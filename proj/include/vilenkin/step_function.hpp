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

// Functions constant on the rank-N cosets I_N(x) ("resolution N").
//
// Values are stored in lexicographic coset order with digit 0 slowest, so
// every coset of rank r <= N occupies a contiguous index block.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "vilenkin/core.hpp"
#include "vilenkin/error.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

// Coset-index arithmetic at a fixed resolution.
class CosetLayout {
 public:
  CosetLayout(GeneratorSequence gen, int resolution);

  const GeneratorSequence& generator() const noexcept { return gen_; }
  int resolution() const noexcept { return resolution_; }
  std::int64_t size() const noexcept { return size_; }
  // Index distance between neighbouring values of digit k.
  std::int64_t stride(int k) const { return strides_.at(static_cast<std::size_t>(k)); }

  // First `resolution` digits of the coset with the given index.
  std::vector<int> digits(std::int64_t index) const;
  int digit(std::int64_t index, int k) const;
  std::int64_t index(std::span<const int> digits) const;
  std::int64_t index_of(const GroupElement& x) const;
  // Representative of the coset (digits beyond the resolution are zero).
  GroupElement element(std::int64_t index) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t subtract(std::int64_t a, std::int64_t b) const;

 private:
  GeneratorSequence gen_;
  int resolution_;
  std::int64_t size_;
  std::vector<std::int64_t> strides_;
};

template <class T>
class BasicStepFunction {
 public:
  using value_type = T;
  using integral_type = std::conditional_t<std::is_integral_v<T>, double, T>;

  BasicStepFunction(GeneratorSequence gen, int resolution, std::vector<T> values)
      : gen_(std::move(gen)), resolution_(resolution), values_(std::move(values)) {
    if (resolution_ < 0 || resolution_ > gen_.depth())
      throw ResolutionError("resolution " + std::to_string(resolution_) + " outside [0, depth]");
    if (static_cast<std::int64_t>(values_.size()) != gen_.ladder(resolution_))
      throw StructuralError("a resolution-N step function needs exactly M_N values");
  }

  static BasicStepFunction zeros(const GeneratorSequence& gen, int resolution) {
    return constant(gen, resolution, T{});
  }
  static BasicStepFunction constant(const GeneratorSequence& gen, int resolution, T c) {
    check_resolution(gen, resolution);
    return BasicStepFunction(gen, resolution, std::vector<T>(static_cast<std::size_t>(gen.ladder(resolution)), c));
  }
  // value * 1_C at the given resolution (which must be >= rank of C).
  static BasicStepFunction indicator(const Coset& c, int resolution, T value = T{1}) {
    auto f = zeros(c.anchor().generator(), resolution);
    const auto [lo, hi] = c.index_range(resolution);
    std::fill(f.values_.begin() + lo, f.values_.begin() + hi, value);
    return f;
  }
  template <class Fn>
  static BasicStepFunction from_function(const GeneratorSequence& gen, int resolution, Fn&& fn) {
    check_resolution(gen, resolution);
    CosetLayout layout(gen, resolution);
    std::vector<T> values(static_cast<std::size_t>(layout.size()));
    for (std::int64_t i = 0; i < layout.size(); ++i) values[static_cast<std::size_t>(i)] = fn(layout.element(i));
    return BasicStepFunction(gen, resolution, std::move(values));
  }

  const GeneratorSequence& generator() const noexcept { return gen_; }
  int resolution() const noexcept { return resolution_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(values_.size()); }
  std::span<const T> values() const noexcept { return values_; }
  CosetLayout layout() const { return CosetLayout(gen_, resolution_); }

  const T& operator[](std::int64_t i) const { return values_[static_cast<std::size_t>(i)]; }
  T& operator[](std::int64_t i) { return values_[static_cast<std::size_t>(i)]; }

  T at(const GroupElement& x) const { return (*this)[layout().index_of(x)]; }

  T sum() const {
    T s{};
    for (const T& v : values_) s += v;
    return s;
  }
  // Haar integral: each rank-N coset has measure 1/M_N.
  integral_type integral() const { return static_cast<integral_type>(sum()) / static_cast<double>(size()); }

  // Same function viewed at a finer resolution.
  BasicStepFunction refine(int finer) const {
    if (finer < resolution_) throw ResolutionError("refine needs a finer resolution");
    check_resolution(gen_, finer);
    const std::int64_t width = gen_.ladder(finer) / gen_.ladder(resolution_);
    std::vector<T> out(static_cast<std::size_t>(gen_.ladder(finer)));
    for (std::int64_t i = 0; i < size(); ++i)
      std::fill_n(out.begin() + i * width, width, values_[static_cast<std::size_t>(i)]);
    return BasicStepFunction(gen_, finer, std::move(out));
  }

  // Conditional expectation onto the rank-`coarser` cosets.
  BasicStepFunction coarsen(int coarser) const
    requires(!std::is_integral_v<T>)
  {
    if (coarser > resolution_ || coarser < 0) throw ResolutionError("coarsen needs a coarser resolution");
    const std::int64_t width = gen_.ladder(resolution_) / gen_.ladder(coarser);
    std::vector<T> out(static_cast<std::size_t>(gen_.ladder(coarser)));
    for (std::size_t i = 0; i < out.size(); ++i) {
      T s{};
      for (std::int64_t j = 0; j < width; ++j) s += values_[i * static_cast<std::size_t>(width) + static_cast<std::size_t>(j)];
      out[i] = s / static_cast<double>(width);
    }
    return BasicStepFunction(gen_, coarser, std::move(out));
  }

  BasicStepFunction conj() const {
    if constexpr (std::is_same_v<T, Complex>) {
      auto out = *this;
      for (auto& v : out.values_) v = std::conj(v);
      return out;
    } else {
      return *this;
    }
  }

  BasicStepFunction& operator+=(const BasicStepFunction& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  BasicStepFunction& operator-=(const BasicStepFunction& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  BasicStepFunction& operator*=(const T& c) {
    for (auto& v : values_) v *= c;
    return *this;
  }
  // Pointwise product.
  BasicStepFunction& operator*=(const BasicStepFunction& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
    return *this;
  }

  friend BasicStepFunction operator+(BasicStepFunction a, const BasicStepFunction& b) { return a += b; }
  friend BasicStepFunction operator-(BasicStepFunction a, const BasicStepFunction& b) { return a -= b; }
  friend BasicStepFunction operator*(BasicStepFunction a, const BasicStepFunction& b) { return a *= b; }
  friend BasicStepFunction operator*(const T& c, BasicStepFunction a) { return a *= c; }

  void check_compatible(const BasicStepFunction& o) const {
    if (!(gen_ == o.gen_)) throw StructuralError("step functions over different generator sequences");
    if (resolution_ != o.resolution_) throw ResolutionError("step functions at different resolutions");
  }

 private:
  static void check_resolution(const GeneratorSequence& gen, int resolution) {
    if (resolution < 0 || resolution > gen.depth())
      throw ResolutionError("resolution " + std::to_string(resolution) + " outside [0, depth]");
  }

  GeneratorSequence gen_;
  int resolution_;
  std::vector<T> values_;
};

using StepFunction = BasicStepFunction<Complex>;
using RealStepFunction = BasicStepFunction<double>;
// Integer-valued functions for the exact Walsh (m = 2) arithmetic path.
using ExactStepFunction = BasicStepFunction<std::int64_t>;

template <class T>
double max_abs_deviation(const BasicStepFunction<T>& a, const BasicStepFunction<T>& b) {
  a.check_compatible(b);
  double worst = 0.0;
  for (std::int64_t i = 0; i < a.size(); ++i) {
    if constexpr (std::is_integral_v<T>) {
      const auto d = a[i] - b[i];
      worst = std::max(worst, static_cast<double>(d < 0 ? -d : d));
    } else {
      worst = std::max(worst, static_cast<double>(std::abs(a[i] - b[i])));
    }
  }
  return worst;
}

template <class T>
double sup_norm(const BasicStepFunction<T>& f) {
  double worst = 0.0;
  for (const auto& v : f.values()) worst = std::max(worst, static_cast<double>(std::abs(v)));
  return worst;
}

StepFunction to_complex(const ExactStepFunction& f);
StepFunction to_complex(const RealStepFunction& f);
// Magnitudes |f|.
RealStepFunction abs(const StepFunction& f);

// Fourier coefficients f^(k), k < M_N, indexed by frequency.
class Spectrum {
 public:
  Spectrum(GeneratorSequence gen, int resolution, std::vector<Complex> coefficients);
  static Spectrum zeros(const GeneratorSequence& gen, int resolution);

  const GeneratorSequence& generator() const noexcept { return gen_; }
  int resolution() const noexcept { return resolution_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(coefficients_.size()); }
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }
  const Complex& operator[](std::int64_t k) const { return coefficients_[static_cast<std::size_t>(k)]; }
  Complex& operator[](std::int64_t k) { return coefficients_[static_cast<std::size_t>(k)]; }

 private:
  GeneratorSequence gen_;
  int resolution_;
  std::vector<Complex> coefficients_;
};

double max_abs_deviation(const Spectrum& a, const Spectrum& b);

// Walsh-Paley spectrum in integer arithmetic: scaled[k] = M_N * f^(k).
struct WalshSpectrum {
  GeneratorSequence generator;
  int resolution;
  std::vector<std::int64_t> scaled;
};

}  // namespace vilenkin
