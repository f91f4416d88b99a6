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

#include "vilenkin/characters.hpp"

#include <numbers>
#include <numeric>

#include "vilenkin/error.hpp"

namespace vilenkin {

namespace {

// exp(2 pi i r / n), exact at the quarter turns.
Complex unit_root(std::int64_t r, std::int64_t n) {
  r %= n;
  if (r < 0) r += n;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == n) return {-1.0, 0.0};
  if (4 * r == n) return {0.0, 1.0};
  if (4 * r == 3 * n) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

// Phases of every character are multiples of 1/L, L = lcm of the radices.
class PhaseTable {
 public:
  PhaseTable(const GeneratorSequence& gen, int resolution) : lcm_(1) {
    for (int k = 0; k < resolution; ++k) lcm_ = std::lcm(lcm_, static_cast<std::int64_t>(gen.radix(k)));
    for (int k = 0; k < resolution; ++k) scale_.push_back(lcm_ / gen.radix(k));
    roots_.reserve(static_cast<std::size_t>(lcm_));
    for (std::int64_t r = 0; r < lcm_; ++r) roots_.push_back(unit_root(r, lcm_));
  }

  // psi_n(x) from frequency digits and element digits.
  Complex value(std::span<const int> n_digits, std::span<const int> x_digits) const {
    std::int64_t phase = 0;
    for (std::size_t k = 0; k < scale_.size(); ++k) phase += static_cast<std::int64_t>(n_digits[k]) * x_digits[k] * scale_[k];
    return roots_[static_cast<std::size_t>(phase % lcm_)];
  }

 private:
  std::int64_t lcm_;
  std::vector<std::int64_t> scale_;
  std::vector<Complex> roots_;
};

// Digits (n_0, ..., n_{N-1}) of frequency n at resolution N.
std::vector<int> frequency_digits(std::int64_t n, const GeneratorSequence& gen, int resolution) {
  std::vector<int> d(static_cast<std::size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    d[static_cast<std::size_t>(k)] = static_cast<int>(n % gen.radix(k));
    n /= gen.radix(k);
  }
  return d;
}

// Layout position holding frequency n after the per-axis transform.
std::vector<std::int64_t> frequency_positions(const CosetLayout& layout) {
  const auto& gen = layout.generator();
  std::vector<std::int64_t> pos(static_cast<std::size_t>(layout.size()));
  for (std::int64_t n = 0; n < layout.size(); ++n) {
    std::int64_t rest = n, p = 0;
    for (int k = 0; k < layout.resolution(); ++k) {
      p += (rest % gen.radix(k)) * layout.stride(k);
      rest /= gen.radix(k);
    }
    pos[static_cast<std::size_t>(n)] = p;
  }
  return pos;
}

// One DFT stage of length m_k along every coordinate k. sign = -1 analyzes
// (conjugate characters), +1 synthesizes.
void transform_axes(std::vector<Complex>& a, const CosetLayout& layout, int sign) {
  const auto& gen = layout.generator();
  std::vector<Complex> buf, roots;
  for (int k = 0; k < layout.resolution(); ++k) {
    const int m = gen.radix(k);
    const std::int64_t stride = layout.stride(k);
    const std::int64_t block = stride * m;
    roots.resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) roots[static_cast<std::size_t>(r)] = unit_root(sign * r, m);
    buf.resize(static_cast<std::size_t>(m));
    for (std::int64_t hi = 0; hi < layout.size(); hi += block) {
      for (std::int64_t lo = 0; lo < stride; ++lo) {
        const std::int64_t base = hi + lo;
        if (m == 2) {
          Complex& u = a[static_cast<std::size_t>(base)];
          Complex& v = a[static_cast<std::size_t>(base + stride)];
          const Complex s = u + v, d = u - v;
          u = s;
          v = d;
          continue;
        }
        for (int u = 0; u < m; ++u) {
          Complex acc{};
          for (int j = 0; j < m; ++j)
            acc += a[static_cast<std::size_t>(base + j * stride)] * roots[static_cast<std::size_t>((u * j) % m)];
          buf[static_cast<std::size_t>(u)] = acc;
        }
        for (int u = 0; u < m; ++u) a[static_cast<std::size_t>(base + u * stride)] = buf[static_cast<std::size_t>(u)];
      }
    }
  }
}

void walsh_axes(std::vector<std::int64_t>& a, const CosetLayout& layout) {
  for (int k = 0; k < layout.resolution(); ++k) {
    const std::int64_t stride = layout.stride(k);
    for (std::int64_t hi = 0; hi < layout.size(); hi += 2 * stride)
      for (std::int64_t lo = 0; lo < stride; ++lo) {
        auto& u = a[static_cast<std::size_t>(hi + lo)];
        auto& v = a[static_cast<std::size_t>(hi + lo + stride)];
        const auto s = u + v, d = u - v;
        u = s;
        v = d;
      }
  }
}

void require_walsh(const GeneratorSequence& gen, int resolution) {
  for (int k = 0; k < resolution; ++k)
    if (gen.radix(k) != 2) throw StructuralError("exact Walsh arithmetic needs m_k = 2 up to the resolution");
}

}  // namespace

Complex rademacher(int k, const GroupElement& x) {
  const auto& gen = x.generator();
  if (k < 0 || k >= gen.depth()) throw RangeError("rademacher index out of range");
  return unit_root(x.digit(k), gen.radix(k));
}

Complex character(std::int64_t n, const GroupElement& x) {
  const auto& gen = x.generator();
  const auto nd = index_to_digits(n, gen);
  return PhaseTable(gen, gen.depth()).value(nd, x.digits());
}

int walsh_character(std::int64_t n, const GroupElement& x) {
  const auto& gen = x.generator();
  require_walsh(gen, gen.depth());
  const auto nd = index_to_digits(n, gen);
  int parity = 0;
  for (int k = 0; k < gen.depth(); ++k) parity ^= nd[static_cast<std::size_t>(k)] & x.digit(k);
  return parity ? -1 : 1;
}

StepFunction character_function(const GeneratorSequence& gen, std::int64_t n, int resolution) {
  if (resolution < 0 || resolution > gen.depth()) throw ResolutionError("resolution outside [0, depth]");
  if (n < 0 || n >= gen.ladder(resolution))
    throw ResolutionError("psi_" + std::to_string(n) + " is not resolution-" + std::to_string(resolution));
  const PhaseTable table(gen, resolution);
  const auto nd = frequency_digits(n, gen, resolution);
  CosetLayout layout(gen, resolution);
  std::vector<Complex> v(static_cast<std::size_t>(layout.size()));
  for (std::int64_t i = 0; i < layout.size(); ++i) v[static_cast<std::size_t>(i)] = table.value(nd, layout.digits(i));
  return StepFunction(gen, resolution, std::move(v));
}

ExactStepFunction walsh_character_function(const GeneratorSequence& gen, std::int64_t n, int resolution) {
  require_walsh(gen, resolution);
  if (n < 0 || n >= gen.ladder(resolution)) throw ResolutionError("psi_n is not representable at this resolution");
  CosetLayout layout(gen, resolution);
  const auto nd = frequency_digits(n, gen, resolution);
  std::vector<std::int64_t> v(static_cast<std::size_t>(layout.size()));
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    int parity = 0;
    for (int k = 0; k < resolution; ++k) parity ^= nd[static_cast<std::size_t>(k)] & layout.digit(i, k);
    v[static_cast<std::size_t>(i)] = parity ? -1 : 1;
  }
  return ExactStepFunction(gen, resolution, std::move(v));
}

Spectrum analyze(const StepFunction& f) {
  const auto layout = f.layout();
  std::vector<Complex> a(f.values().begin(), f.values().end());
  transform_axes(a, layout, -1);
  const auto pos = frequency_positions(layout);
  const double scale = 1.0 / static_cast<double>(layout.size());
  std::vector<Complex> out(a.size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a[static_cast<std::size_t>(pos[n])] * scale;
  return Spectrum(f.generator(), f.resolution(), std::move(out));
}

StepFunction synthesize(const Spectrum& s) {
  CosetLayout layout(s.generator(), s.resolution());
  const auto pos = frequency_positions(layout);
  std::vector<Complex> a(static_cast<std::size_t>(layout.size()));
  for (std::size_t n = 0; n < a.size(); ++n) a[static_cast<std::size_t>(pos[n])] = s[static_cast<std::int64_t>(n)];
  transform_axes(a, layout, +1);
  return StepFunction(s.generator(), s.resolution(), std::move(a));
}

Spectrum analyze_direct(const StepFunction& f) {
  const auto layout = f.layout();
  const PhaseTable table(f.generator(), f.resolution());
  std::vector<std::vector<int>> xd(static_cast<std::size_t>(layout.size()));
  for (std::int64_t i = 0; i < layout.size(); ++i) xd[static_cast<std::size_t>(i)] = layout.digits(i);
  std::vector<Complex> out(static_cast<std::size_t>(layout.size()));
  for (std::int64_t n = 0; n < layout.size(); ++n) {
    const auto nd = frequency_digits(n, f.generator(), f.resolution());
    Complex acc{};
    for (std::int64_t i = 0; i < layout.size(); ++i) acc += f[i] * std::conj(table.value(nd, xd[static_cast<std::size_t>(i)]));
    out[static_cast<std::size_t>(n)] = acc / static_cast<double>(layout.size());
  }
  return Spectrum(f.generator(), f.resolution(), std::move(out));
}

StepFunction synthesize_direct(const Spectrum& s) {
  CosetLayout layout(s.generator(), s.resolution());
  const PhaseTable table(s.generator(), s.resolution());
  std::vector<std::vector<int>> nd(static_cast<std::size_t>(layout.size()));
  for (std::int64_t n = 0; n < layout.size(); ++n) nd[static_cast<std::size_t>(n)] = frequency_digits(n, s.generator(), s.resolution());
  std::vector<Complex> out(static_cast<std::size_t>(layout.size()));
  for (std::int64_t i = 0; i < layout.size(); ++i) {
    const auto xd = layout.digits(i);
    Complex acc{};
    for (std::int64_t n = 0; n < layout.size(); ++n) acc += s[n] * table.value(nd[static_cast<std::size_t>(n)], xd);
    out[static_cast<std::size_t>(i)] = acc;
  }
  return StepFunction(s.generator(), s.resolution(), std::move(out));
}

WalshSpectrum analyze_exact(const ExactStepFunction& f) {
  require_walsh(f.generator(), f.resolution());
  const auto layout = f.layout();
  std::vector<std::int64_t> a(f.values().begin(), f.values().end());
  walsh_axes(a, layout);
  const auto pos = frequency_positions(layout);
  std::vector<std::int64_t> out(a.size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a[static_cast<std::size_t>(pos[n])];
  return {f.generator(), f.resolution(), std::move(out)};
}

ExactStepFunction synthesize_exact(const WalshSpectrum& s) {
  require_walsh(s.generator, s.resolution);
  CosetLayout layout(s.generator, s.resolution);
  if (static_cast<std::int64_t>(s.scaled.size()) != layout.size()) throw StructuralError("spectrum size mismatch");
  const auto pos = frequency_positions(layout);
  std::vector<std::int64_t> a(s.scaled.size());
  for (std::size_t n = 0; n < a.size(); ++n) a[static_cast<std::size_t>(pos[n])] = s.scaled[n];
  walsh_axes(a, layout);
  for (auto& v : a) {
    if (v % layout.size() != 0) throw DomainError("scaled Walsh spectrum does not synthesize to integers");
    v /= layout.size();
  }
  return ExactStepFunction(s.generator, s.resolution, std::move(a));
}

StepFunction partial_sum(const StepFunction& f, std::int64_t n) {
  if (n < 0) throw DomainError("partial sum index must be >= 0");
  if (n > f.size())
    throw ResolutionError("S_" + std::to_string(n) + " needs resolution with M_N >= n; raise the resolution");
  auto s = analyze(f);
  for (std::int64_t k = n; k < s.size(); ++k) s[k] = 0.0;
  return synthesize(s);
}

StepFunction convolve(const StepFunction& f, const StepFunction& g) {
  f.check_compatible(g);
  const auto layout = f.layout();
  const std::int64_t size = layout.size();
  std::vector<Complex> out(static_cast<std::size_t>(size));
  for (std::int64_t x = 0; x < size; ++x) {
    Complex acc{};
    for (std::int64_t t = 0; t < size; ++t) acc += f[t] * g[layout.subtract(x, t)];
    out[static_cast<std::size_t>(x)] = acc / static_cast<double>(size);
  }
  return StepFunction(f.generator(), f.resolution(), std::move(out));
}

StepFunction convolve_fast(const StepFunction& f, const StepFunction& g) {
  f.check_compatible(g);
  auto a = analyze(f);
  const auto b = analyze(g);
  for (std::int64_t k = 0; k < a.size(); ++k) a[k] *= b[k];
  return synthesize(a);
}

}  // namespace vilenkin
