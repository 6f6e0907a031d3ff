// Copyright 2026 The hofg Authors
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

#ifndef HOFG_ZECKENDORF_HPP_
#define HOFG_ZECKENDORF_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hofg/fibonacci.hpp"

namespace hofg {

// Minimal distance between consecutive ranks. Canonical decompositions never
// use two consecutive Fibonacci numbers; relaxed ones only forbid repeats.
enum class Gap : unsigned { kRelaxed = 1, kCanonical = 2 };

// A sum of Fibonacci numbers, stored as ranks in increasing order. Every rank
// is at least 2 and at most kMaxRank, and consecutive ranks differ by at least
// the gap. The empty decomposition represents 0.
class Decomposition {
 public:
  Decomposition() = default;

  // Validating constructors; throw DomainError (or RankOverflow for ranks
  // above kMaxRank) on invariant violations.
  static Decomposition canonical(std::vector<FibRank> ranks);
  static Decomposition relaxed(std::vector<FibRank> ranks);

  std::span<const FibRank> ranks() const noexcept { return ranks_; }
  Gap gap() const noexcept { return gap_; }
  std::size_t size() const noexcept { return ranks_.size(); }
  bool empty() const noexcept { return ranks_.empty(); }

  // Lowest rank. Requires a non-empty decomposition.
  FibRank lowest() const;

  bool operator==(const Decomposition& other) const noexcept {
    return ranks_ == other.ranks_;
  }

 private:
  Decomposition(std::vector<FibRank> ranks, Gap gap)
      : ranks_(std::move(ranks)), gap_(gap) {}

  std::vector<FibRank> ranks_;
  Gap gap_ = Gap::kCanonical;
};

// Classification of n >= 1 by the low end of its canonical decomposition.
enum class RankClass {
  kTwo,        // low(n) = 2
  kThreeOdd,   // F_3 + F_odd + ...
  kThreeEven,  // F_3 + F_even + ...
  kThreeBare,  // exactly F_3, i.e. n = 2
  kHighEven,   // low(n) >= 4, even
  kHighOdd,    // low(n) >= 5, odd
};

std::string_view to_string(RankClass c) noexcept;

// Greedy canonical (Zeckendorf) decomposition.
Decomposition decompose(SeqValue n);

// Sum of F_k over all ranks. Throws ValueOverflow past the SeqValue domain.
SeqValue sum_of(const Decomposition& d);

// Canonical form of a relaxed decomposition, obtained by repeatedly merging
// the highest pair F_m + F_{m+1} into F_{m+2}. Throws RankOverflow if a merge
// produces a rank above kMaxRank.
Decomposition normalize(const Decomposition& d);

// Lowest rank of the canonical decomposition. DomainError for n = 0.
FibRank low(SeqValue n);

// DomainError for n = 0.
RankClass classify(SeqValue n);

// Smallest m > n with classify(m) == kThreeOdd.
SeqValue next_three_odd(SeqValue n);

// "F_4+F_6"; "0" for the empty decomposition.
std::string render_sum(const Decomposition& d);
// "[4,6]"
std::string render_ranks(const Decomposition& d);

// Splits the lowest term F_k into F_{k-2} + F_{k-1} while k >= 4. The result
// is a relaxed decomposition of the same value.
Decomposition relax_lowest(const Decomposition& d);

}  // namespace hofg

#endif  // HOFG_ZECKENDORF_HPP_
