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

#include "vilenkin/core.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "vilenkin/error.hpp"

namespace vilenkin {

GeneratorSequence::GeneratorSequence(std::vector<int> radices) {
  if (radices.empty()) throw RangeError("generator sequence must have depth >= 1");
  auto data = std::make_shared<Data>();
  data->ladder.reserve(radices.size() + 1);
  data->ladder.push_back(1);
  for (int m : radices) {
    if (m < 2) throw RangeError("radix " + std::to_string(m) + " is below 2");
    const std::int64_t prev = data->ladder.back();
    if (prev > std::numeric_limits<std::int64_t>::max() / m)
      throw RangeError("M_D overflows 64-bit integers");
    data->ladder.push_back(prev * m);
    data->walsh = data->walsh && m == 2;
  }
  data->radices = std::move(radices);
  data_ = std::move(data);
}

GeneratorSequence GeneratorSequence::parse(std::string_view text) {
  std::vector<int> radices;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
      throw ParseError("malformed radix list '" + std::string(text) + "'");
    radices.push_back(value);
    pos = comma + 1;
  }
  return GeneratorSequence(std::move(radices));
}

GeneratorSequence GeneratorSequence::walsh(int depth) {
  if (depth < 1) throw RangeError("depth must be >= 1");
  return GeneratorSequence(std::vector<int>(static_cast<std::size_t>(depth), 2));
}

int GeneratorSequence::radix(int k) const {
  if (k < 0 || k >= depth()) throw RangeError("radix index " + std::to_string(k) + " out of range");
  return data_->radices[static_cast<std::size_t>(k)];
}

std::int64_t GeneratorSequence::ladder(int n) const {
  if (n < 0 || n > depth()) throw RangeError("ladder index " + std::to_string(n) + " out of range");
  return data_->ladder[static_cast<std::size_t>(n)];
}

std::string GeneratorSequence::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < data_->radices.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(data_->radices[k]);
  }
  return out;
}

bool operator==(const GeneratorSequence& a, const GeneratorSequence& b) noexcept {
  return a.data_ == b.data_ || a.data_->radices == b.data_->radices;
}

// ---------------------------------------------------------------------------

GroupElement::GroupElement(GeneratorSequence gen, std::vector<int> digits)
    : gen_(std::move(gen)), digits_(std::move(digits)) {
  if (static_cast<int>(digits_.size()) != gen_.depth())
    throw StructuralError("digit vector length differs from generator depth");
  for (int k = 0; k < gen_.depth(); ++k) {
    const int d = digits_[static_cast<std::size_t>(k)];
    if (d < 0 || d >= gen_.radix(k))
      throw RangeError("digit " + std::to_string(k) + " = " + std::to_string(d) + " outside Z_m");
  }
}

GroupElement GroupElement::zero(const GeneratorSequence& gen) {
  return GroupElement(gen, std::vector<int>(static_cast<std::size_t>(gen.depth()), 0));
}

GroupElement GroupElement::unit(const GeneratorSequence& gen, int n) {
  if (n < 0 || n >= gen.depth()) throw RangeError("e_n index out of range");
  std::vector<int> digits(static_cast<std::size_t>(gen.depth()), 0);
  digits[static_cast<std::size_t>(n)] = 1;
  return GroupElement(gen, std::move(digits));
}

int GroupElement::digit(int k) const {
  if (k < 0 || k >= depth()) throw RangeError("digit index out of range");
  return digits_[static_cast<std::size_t>(k)];
}

GroupElement GroupElement::operator-() const { return (-1) * *this; }

GroupElement operator+(const GroupElement& x, const GroupElement& y) {
  if (!(x.gen_ == y.gen_)) throw StructuralError("group elements over different generator sequences");
  std::vector<int> out(x.digits_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const int m = x.gen_.radices()[k];
    out[k] = (x.digits_[k] + y.digits_[k]) % m;
  }
  return GroupElement(x.gen_, std::move(out));
}

GroupElement operator-(const GroupElement& x, const GroupElement& y) { return x + (-y); }

GroupElement operator*(int s, const GroupElement& x) {
  std::vector<int> out(x.digits_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const int m = x.gen_.radices()[k];
    const long long v = (static_cast<long long>(s) * x.digits_[k]) % m;
    out[k] = static_cast<int>(v < 0 ? v + m : v);
  }
  return GroupElement(x.gen_, std::move(out));
}

bool operator==(const GroupElement& x, const GroupElement& y) noexcept {
  return x.gen_ == y.gen_ && x.digits_ == y.digits_;
}

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < digits_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(digits_[k]);
  }
  return out + ")";
}

GroupElement add(const GroupElement& x, const GroupElement& y) { return x + y; }
GroupElement negate(const GroupElement& x) { return -x; }
GroupElement subtract(const GroupElement& x, const GroupElement& y) { return x - y; }

// ---------------------------------------------------------------------------

Coset::Coset(int rank, GroupElement anchor) : rank_(rank), anchor_(std::move(anchor)) {
  if (rank_ < 0 || rank_ > anchor_.depth()) throw RangeError("coset rank out of range");
}

double Coset::measure() const { return 1.0 / static_cast<double>(anchor_.generator().ladder(rank_)); }

bool Coset::contains(const GroupElement& y) const {
  if (!(y.generator() == anchor_.generator())) throw StructuralError("coset and element over different groups");
  for (int k = 0; k < rank_; ++k)
    if (y.digit(k) != anchor_.digit(k)) return false;
  return true;
}

std::pair<std::int64_t, std::int64_t> Coset::index_range(int resolution) const {
  const auto& gen = anchor_.generator();
  if (resolution < rank_ || resolution > gen.depth())
    throw ResolutionError("coset of rank " + std::to_string(rank_) + " has no index range at resolution " +
                          std::to_string(resolution));
  std::int64_t prefix = 0;
  for (int k = 0; k < rank_; ++k) prefix = prefix * gen.radix(k) + anchor_.digit(k);
  const std::int64_t width = gen.ladder(resolution) / gen.ladder(rank_);
  return {prefix * width, (prefix + 1) * width};
}

std::string Coset::to_string() const {
  std::ostringstream os;
  os << "I_" << rank_ << "(";
  for (int k = 0; k < rank_; ++k) os << (k ? "," : "") << anchor_.digit(k);
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<int> index_to_digits(std::int64_t n, const GeneratorSequence& gen) {
  if (n < 0 || n >= gen.ladder(gen.depth()))
    throw RangeError("index " + std::to_string(n) + " outside [0, M_D)");
  std::vector<int> digits(static_cast<std::size_t>(gen.depth()));
  for (int k = 0; k < gen.depth(); ++k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(n % gen.radix(k));
    n /= gen.radix(k);
  }
  return digits;
}

std::int64_t digits_to_index(std::span<const int> digits, const GeneratorSequence& gen) {
  if (static_cast<int>(digits.size()) > gen.depth()) throw StructuralError("too many digits");
  std::int64_t n = 0;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    const int d = digits[k];
    if (d < 0 || d >= gen.radices()[k]) throw RangeError("digit outside Z_m");
    n += d * gen.ladder(static_cast<int>(k));
  }
  return n;
}

int order(std::int64_t n, const GeneratorSequence& gen) {
  if (n < 1) throw DomainError("order(n) requires n >= 1");
  const int depth = gen.depth();
  if (n > gen.ladder(depth)) throw RangeError("order(n) requires n <= M_D");
  int j = 0;
  while (j < depth && gen.ladder(j + 1) <= n) ++j;
  return j;
}

LeadingDecomposition leading_term_decomposition(std::int64_t n, const GeneratorSequence& gen) {
  if (n < 1 || n >= gen.ladder(gen.depth())) throw RangeError("decomposition requires 1 <= n < M_D");
  const auto digits = index_to_digits(n, gen);
  LeadingDecomposition out;
  for (int k = gen.depth() - 1; k >= 0; --k) {
    const int s = digits[static_cast<std::size_t>(k)];
    if (s != 0) out.terms.push_back({k, s, gen.ladder(k)});
  }
  std::int64_t rest = n;
  out.tails.push_back(rest);
  for (const auto& t : out.terms) {
    rest -= t.coefficient * t.block;
    out.tails.push_back(rest);
  }
  return out;
}

std::vector<ComplementCoset> complement_decomposition(int N, const GeneratorSequence& gen) {
  if (N < 1 || N > gen.depth()) throw RangeError("complement decomposition requires 1 <= N <= D");
  std::vector<ComplementCoset> out;
  for (int k = 0; k + 2 <= N; ++k)
    for (int sk = 1; sk < gen.radix(k); ++sk)
      for (int l = k + 1; l <= N - 1; ++l)
        for (int sl = 1; sl < gen.radix(l); ++sl) {
          const auto anchor = sk * GroupElement::unit(gen, k) + sl * GroupElement::unit(gen, l);
          out.push_back({Coset(l + 1, anchor), ComplementFamily::pair, k, l, sk, sl});
        }
  for (int k = 0; k < N; ++k)
    for (int sk = 1; sk < gen.radix(k); ++sk)
      out.push_back({Coset(N, sk * GroupElement::unit(gen, k)), ComplementFamily::single, k, -1, sk, 0});
  return out;
}

}  // namespace vilenkin
