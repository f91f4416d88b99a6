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

// Generalized Rademacher functions, the Vilenkin character system and
// Fourier analysis of step functions.

#include <cstdint>

#include "vilenkin/core.hpp"
#include "vilenkin/step_function.hpp"

namespace vilenkin {

// r_k(x) = exp(2 pi i x_k / m_k).
Complex rademacher(int k, const GroupElement& x);

// psi_n(x) = prod_k r_k(x)^{n_k}. Requires n < M_D.
Complex character(std::int64_t n, const GroupElement& x);

// psi_n(x) in {-1, +1} for Walsh-Paley generator sequences.
int walsh_character(std::int64_t n, const GroupElement& x);

// psi_n as a resolution-N step function; requires n < M_N.
StepFunction character_function(const GeneratorSequence& gen, std::int64_t n, int resolution);
ExactStepFunction walsh_character_function(const GeneratorSequence& gen, std::int64_t n, int resolution);

// f^(k) = integral of f * conj(psi_k), for all k < M_N.
//
// analyze/synthesize use the factorized transform (one size-m_k DFT stage
// per coordinate, O(M_N * sum m_k)); the *_direct variants sum the
// definition in O(M_N^2) and serve as the reference.
Spectrum analyze(const StepFunction& f);
StepFunction synthesize(const Spectrum& s);
Spectrum analyze_direct(const StepFunction& f);
StepFunction synthesize_direct(const Spectrum& s);

// Integer Walsh-Hadamard transform. synthesize_exact throws if a value is
// not an integer (scaled coefficients not of the form M_N * integer spectrum).
WalshSpectrum analyze_exact(const ExactStepFunction& f);
ExactStepFunction synthesize_exact(const WalshSpectrum& s);

// S_n f = sum_{k<n} f^(k) psi_k; S_0 f = 0. Requires n <= M_N.
StepFunction partial_sum(const StepFunction& f, std::int64_t n);

// (f * g)(x) = integral f(t) g(x - t) dt, summed from the definition.
StepFunction convolve(const StepFunction& f, const StepFunction& g);
// Same convolution through the spectrum: (f * g)^ = f^ g^.
StepFunction convolve_fast(const StepFunction& f, const StepFunction& g);

}  // namespace vilenkin
