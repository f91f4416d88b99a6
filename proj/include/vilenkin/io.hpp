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

// CSV serialization of step functions and spectra, and all-or-nothing file output.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vilenkin/step_function.hpp"

namespace vilenkin {

// 17 significant digits, "%.17g".
std::string format_double(double v);

// Header "coset_index,re,im", one row per coset in index order.
std::string step_function_csv(const StepFunction& f);
// Header "frequency,re,im".
std::string spectrum_csv(const Spectrum& s);

// Reads the format written by step_function_csv. Rows may come in any order
// but every coset index must appear exactly once.
StepFunction read_step_function_csv(std::istream& in, const GeneratorSequence& gen, int resolution);

// Writes every file to a temporary sibling first and renames them only after
// all writes succeeded, so a failed write leaves every target untouched.
void write_files(const std::vector<std::pair<std::filesystem::path, std::string>>& files);

}  // namespace vilenkin
