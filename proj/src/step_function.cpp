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

#include "vilenkin/step_function.hpp"

namespace vilenkin {

CosetLayout::CosetLayout(GeneratorSequence gen, int resolution)
    : gen_(std::move(gen)), resolution_(resolution) {
  if (resolution_ < 0 || resolution_ > gen_.depth())
    throw ResolutionError("resolution " + std::to_string(resolution_) + " outside [0, depth]");
  size_ = gen_.ladder(resolution_);
  strides_.resize(static_cast<std::size_t>(resolution_));
  for (int k = 0; k < resolution_; ++k) strides_[static_cast<std::size_t>(k)] = size_ / gen_.ladder(k + 1);
}

std::vector<int> CosetLayout::digits(std::int64_t index) const {
  std::vector<int> out(static_cast<std::size_t>(resolution_));
  for (int k = resolution_ - 1; k >= 0; --k) {
    const int m = gen_.radices()[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = static_cast<int>(index % m);
    index /= m;
  }
  return out;
}

int CosetLayout::digit(std::int64_t index, int k) const {
  return static_cast<int>((index / strides_[static_cast<std::size_t>(k)]) % gen_.radices()[static_cast<std::size_t>(k)]);
}

std::int64_t CosetLayout::index(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) < resolution_) throw StructuralError("not enough digits for resolution");
  std::int64_t idx = 0;
  for (int k = 0; k < resolution_; ++k) idx = idx * gen_.radices()[static_cast<std::size_t>(k)] + digits[static_cast<std::size_t>(k)];
  return idx;
}

std::int64_t CosetLayout::index_of(const GroupElement& x) const {
  if (!(x.generator() == gen_)) throw StructuralError("element over a different generator sequence");
  return index(x.digits());
}

GroupElement CosetLayout::element(std::int64_t index) const {
  auto d = digits(index);
  d.resize(static_cast<std::size_t>(gen_.depth()), 0);
  return GroupElement(gen_, std::move(d));
}

std::int64_t CosetLayout::add(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0;
  for (int k = 0; k < resolution_; ++k) {
    const std::int64_t s = strides_[static_cast<std::size_t>(k)];
    const int m = gen_.radices()[static_cast<std::size_t>(k)];
    const std::int64_t da = a / s, db = b / s;
    out += ((da + db) % m) * s;
    a -= da * s;
    b -= db * s;
  }
  return out;
}

std::int64_t CosetLayout::subtract(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0;
  for (int k = 0; k < resolution_; ++k) {
    const std::int64_t s = strides_[static_cast<std::size_t>(k)];
    const int m = gen_.radices()[static_cast<std::size_t>(k)];
    const std::int64_t da = a / s, db = b / s;
    out += ((da - db + m) % m) * s;
    a -= da * s;
    b -= db * s;
  }
  return out;
}

StepFunction to_complex(const ExactStepFunction& f) {
  std::vector<Complex> v(f.values().begin(), f.values().end());
  return StepFunction(f.generator(), f.resolution(), std::move(v));
}

StepFunction to_complex(const RealStepFunction& f) {
  std::vector<Complex> v(f.values().begin(), f.values().end());
  return StepFunction(f.generator(), f.resolution(), std::move(v));
}

RealStepFunction abs(const StepFunction& f) {
  std::vector<double> v(static_cast<std::size_t>(f.size()));
  for (std::int64_t i = 0; i < f.size(); ++i) v[static_cast<std::size_t>(i)] = std::abs(f[i]);
  return RealStepFunction(f.generator(), f.resolution(), std::move(v));
}

Spectrum::Spectrum(GeneratorSequence gen, int resolution, std::vector<Complex> coefficients)
    : gen_(std::move(gen)), resolution_(resolution), coefficients_(std::move(coefficients)) {
  if (resolution_ < 0 || resolution_ > gen_.depth()) throw ResolutionError("spectrum resolution outside [0, depth]");
  if (static_cast<std::int64_t>(coefficients_.size()) != gen_.ladder(resolution_))
    throw StructuralError("a resolution-N spectrum needs exactly M_N coefficients");
}

Spectrum Spectrum::zeros(const GeneratorSequence& gen, int resolution) {
  if (resolution < 0 || resolution > gen.depth()) throw ResolutionError("spectrum resolution outside [0, depth]");
  return Spectrum(gen, resolution, std::vector<Complex>(static_cast<std::size_t>(gen.ladder(resolution))));
}

double max_abs_deviation(const Spectrum& a, const Spectrum& b) {
  if (!(a.generator() == b.generator()) || a.resolution() != b.resolution())
    throw StructuralError("spectra are not comparable");
  double worst = 0.0;
  for (std::int64_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace vilenkin
