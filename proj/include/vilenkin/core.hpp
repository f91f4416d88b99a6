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

// Bounded Vilenkin groups truncated at a finite depth D.
//
// G_m is the direct product of the cyclic groups Z_{m_0} x Z_{m_1} x ...;
// every object in this library is built from the first D factors. The
// generalized number system M_0 = 1, M_{n+1} = m_n M_n addresses both the
// group (digit vectors) and the character system (frequencies).

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vilenkin {

class GeneratorSequence {
 public:
  explicit GeneratorSequence(std::vector<int> radices);

  // Parses a comma separated radix list such as "2,3,2,3".
  static GeneratorSequence parse(std::string_view text);
  // m = (2, 2, ..., 2) of the given depth.
  static GeneratorSequence walsh(int depth);

  int depth() const noexcept { return static_cast<int>(data_->radices.size()); }
  int radix(int k) const;
  std::span<const int> radices() const noexcept { return data_->radices; }

  // M_n for 0 <= n <= depth().
  std::int64_t ladder(int n) const;
  std::span<const std::int64_t> ladder() const noexcept { return data_->ladder; }

  bool is_walsh() const noexcept { return data_->walsh; }
  std::string to_string() const;

  friend bool operator==(const GeneratorSequence& a, const GeneratorSequence& b) noexcept;

 private:
  struct Data {
    std::vector<int> radices;
    std::vector<std::int64_t> ladder;
    bool walsh = true;
  };
  std::shared_ptr<const Data> data_;
};

class GroupElement {
 public:
  GroupElement(GeneratorSequence gen, std::vector<int> digits);

  static GroupElement zero(const GeneratorSequence& gen);
  // e_n: digit n equal to one, all others zero.
  static GroupElement unit(const GeneratorSequence& gen, int n);

  const GeneratorSequence& generator() const noexcept { return gen_; }
  std::span<const int> digits() const noexcept { return digits_; }
  int digit(int k) const;
  int depth() const noexcept { return static_cast<int>(digits_.size()); }

  GroupElement operator-() const;
  friend GroupElement operator+(const GroupElement& x, const GroupElement& y);
  friend GroupElement operator-(const GroupElement& x, const GroupElement& y);
  // s-fold sum x + ... + x (s may be negative).
  friend GroupElement operator*(int s, const GroupElement& x);
  friend bool operator==(const GroupElement& x, const GroupElement& y) noexcept;

  // "(x_0,x_1,...)"
  std::string to_string() const;

 private:
  GeneratorSequence gen_;
  std::vector<int> digits_;
};

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement negate(const GroupElement& x);
GroupElement subtract(const GroupElement& x, const GroupElement& y);

// I_n(x): all y agreeing with the anchor in digits 0..n-1.
class Coset {
 public:
  Coset(int rank, GroupElement anchor);

  int rank() const noexcept { return rank_; }
  const GroupElement& anchor() const noexcept { return anchor_; }
  double measure() const;
  bool contains(const GroupElement& y) const;

  // Half-open range [first, last) of rank-`resolution` coset indices covered
  // by this coset, in lexicographic order (digit 0 slowest).
  std::pair<std::int64_t, std::int64_t> index_range(int resolution) const;

  std::string to_string() const;

 private:
  int rank_;
  GroupElement anchor_;
};

// Mixed-radix digits n_k of n = sum n_k M_k, padded to the full depth.
std::vector<int> index_to_digits(std::int64_t n, const GeneratorSequence& gen);
std::int64_t digits_to_index(std::span<const int> digits, const GeneratorSequence& gen);

// |n|: the unique j with M_j <= n < M_{j+1}. Requires 1 <= n <= M_D; n = M_D maps to D.
int order(std::int64_t n, const GeneratorSequence& gen);

struct LeadingTerm {
  int rank;                // n_l
  int coefficient;         // s_{n_l}, 1 <= s < m_{n_l}
  std::int64_t block;      // M_{n_l}
};

struct LeadingDecomposition {
  // Strictly decreasing ranks.
  std::vector<LeadingTerm> terms;
  // tails[k] = n^{(k)} = sum of terms k+1.., so tails[0] = n and tails.back() = 0.
  std::vector<std::int64_t> tails;
};

LeadingDecomposition leading_term_decomposition(std::int64_t n, const GeneratorSequence& gen);

enum class ComplementFamily { pair, single };

struct ComplementCoset {
  Coset coset;
  ComplementFamily family;
  int k;     // first nonzero digit
  int l;     // second nonzero digit (pair family), -1 otherwise
  int s_k;
  int s_l;   // 0 for the single family
};

// Disjoint cover of G_m \ I_N by the cosets I_{l+1}(s_k e_k + s_l e_l),
// 0 <= k < l <= N-1, followed by I_N(s_k e_k), 0 <= k <= N-1.
std::vector<ComplementCoset> complement_decomposition(int N, const GeneratorSequence& gen);

}  // namespace vilenkin
