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

#include "vilenkin/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "vilenkin/characters.hpp"
#include "vilenkin/error.hpp"

namespace vilenkin {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string complex_csv(const char* header, std::span<const Complex> values) {
  std::string out = header;
  out += '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(values[i].real());
    out += ',';
    out += format_double(values[i].imag());
    out += '\n';
  }
  return out;
}

}  // namespace

std::string step_function_csv(const StepFunction& f) { return complex_csv("coset_index,re,im", f.values()); }

std::string spectrum_csv(const Spectrum& s) { return complex_csv("frequency,re,im", s.coefficients()); }

StepFunction read_step_function_csv(std::istream& in, const GeneratorSequence& gen, int resolution) {
  auto f = StepFunction::zeros(gen, resolution);
  std::vector<char> seen(static_cast<std::size_t>(f.size()), 0);
  std::string line;
  if (!std::getline(in, line) || line.rfind("coset_index,re,im", 0) != 0) throw ParseError("missing CSV header coset_index,re,im");
  std::int64_t rows = 0;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
      throw ParseError("line " + std::to_string(lineno) + ": expected three fields");
    try {
      std::size_t used = 0;
      const long long idx = std::stoll(a, &used);
      if (used != a.size() || idx < 0 || idx >= f.size()) throw ParseError("");
      if (seen[static_cast<std::size_t>(idx)]) throw ParseError("line " + std::to_string(lineno) + ": duplicate index");
      seen[static_cast<std::size_t>(idx)] = 1;
      f[idx] = Complex(std::stod(b), std::stod(c));
      ++rows;
    } catch (const ParseError& e) {
      if (*e.what()) throw;
      throw ParseError("line " + std::to_string(lineno) + ": bad coset index");
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad number");
    }
  }
  if (rows != f.size())
    throw ParseError("expected " + std::to_string(f.size()) + " rows, got " + std::to_string(rows));
  return f;
}

void write_files(const std::vector<std::pair<std::filesystem::path, std::string>>& files) {
  std::vector<std::filesystem::path> temps;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& t : temps) std::filesystem::remove(t, ec);
  };
  try {
    for (const auto& [path, content] : files) {
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      auto tmp = path;
      tmp += ".tmp";
      temps.push_back(tmp);
      std::ofstream out(tmp, std::ios::binary);
      out << content;
      out.close();
      if (!out) throw Error("cannot write " + tmp.string());
    }
    for (std::size_t i = 0; i < files.size(); ++i) std::filesystem::rename(temps[i], files[i].first);
  } catch (...) {
    cleanup();
    throw;
  }
}

}  // namespace vilenkin
