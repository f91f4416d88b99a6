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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "vilenkin/error.hpp"
#include "vilenkin/io.hpp"
#include "vilenkin/parallel.hpp"
#include "vilenkin/verify.hpp"

using namespace vilenkin;
namespace fs = std::filesystem;

TEST_CASE("CSV round trip keeps every bit") {
  const auto g = GeneratorSequence::parse("2,3,2");
  const auto f = oracle::random_function(g, 3, 12);
  std::istringstream in(step_function_csv(f));
  const auto back = read_step_function_csv(in, g, 3);
  for (std::int64_t i = 0; i < f.size(); ++i) CHECK(back[i] == f[i]);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(spectrum_csv(Spectrum::zeros(g, 1)) == "frequency,re,im\n0,0,0\n1,0,0\n");

  std::istringstream missing("coset_index,re,im\n0,1,0\n");
  CHECK_THROWS_AS(read_step_function_csv(missing, g, 1), ParseError);
  std::istringstream dup("coset_index,re,im\n0,1,0\n0,1,0\n");
  CHECK_THROWS_AS(read_step_function_csv(dup, g, 1), ParseError);
  std::istringstream junk("coset_index,re,im\n0,x,0\n1,1,0\n");
  CHECK_THROWS_AS(read_step_function_csv(junk, g, 1), ParseError);
  std::istringstream header("a,b,c\n");
  CHECK_THROWS_AS(read_step_function_csv(header, g, 1), ParseError);
}

TEST_CASE("file output is all or nothing") {
  const auto dir = fs::temp_directory_path() / "vilenkin_io_test";
  fs::remove_all(dir);
  write_files({{dir / "a.txt", "alpha"}, {dir / "b.txt", "beta"}});
  std::ifstream a(dir / "a.txt");
  std::string text;
  std::getline(a, text);
  CHECK(text == "alpha");
  // the second target sits under a regular file, so its write fails before any rename
  CHECK_THROWS(write_files({{dir / "a.txt", "changed"}, {dir / "b.txt" / "c.txt", "oops"}}));
  std::ifstream a2(dir / "a.txt");
  std::getline(a2, text);
  CHECK(text == "alpha");
  CHECK_FALSE(fs::exists(dir / "a.txt.tmp"));
  fs::remove_all(dir);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, [&](std::int64_t i) { ++hits[static_cast<std::size_t>(i)]; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, [](std::int64_t i) { if (i == 7) throw RangeError("boom"); }), RangeError);
  CHECK(thread_count() >= 1);
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope"), RangeError);
  VerifyConfig cfg;
  cfg.generators = {GeneratorSequence::parse("2,3,2")};
  cfg.weights = {"cesaro:0.5"};
  cfg.r_max = 12;
  const auto r = run_suite("lemma2", cfg);
  CHECK(r.passed());
  CHECK(r.first_failure() == nullptr);
  CHECK(r.reports.front().details["cases"] == 11);
  CHECK(run_suite("closed-forms").passed());
  CHECK(run_suite("abel", cfg).passed());
  CHECK(natural_alpha("cesaro:0.25") == 0.25);
  CHECK(natural_alpha("constant") == 1.0);
  CHECK(natural_alpha("constant", 0.3) == 0.3);
  cfg.r_max = 13;
  CHECK_THROWS_AS(run_suite("lemma2", cfg), ResolutionError);
}
