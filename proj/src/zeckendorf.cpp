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

#include "hofg/zeckendorf.hpp"

#include <algorithm>
#include <string>

#include "hofg/error.hpp"

namespace hofg {

namespace {

void Validate(const std::vector<FibRank>& ranks, Gap gap) {
  const auto step = static_cast<FibRank>(gap);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] < 2) {
      throw DomainError("rank " + std::to_string(ranks[i]) +
                        " below 2 in a decomposition");
    }
    if (ranks[i] > kMaxRank) {
      throw RankOverflow("rank " + std::to_string(ranks[i]) +
                         " exceeds the supported maximum");
    }
    if (i > 0 && ranks[i] < ranks[i - 1] + step) {
      throw DomainError("ranks " + std::to_string(ranks[i - 1]) + " and " +
                        std::to_string(ranks[i]) +
                        (gap == Gap::kCanonical ? " are not separated by 2"
                                                : " are not increasing"));
    }
  }
}

}  // namespace

Decomposition Decomposition::canonical(std::vector<FibRank> ranks) {
  Validate(ranks, Gap::kCanonical);
  return Decomposition(std::move(ranks), Gap::kCanonical);
}

Decomposition Decomposition::relaxed(std::vector<FibRank> ranks) {
  Validate(ranks, Gap::kRelaxed);
  return Decomposition(std::move(ranks), Gap::kRelaxed);
}

FibRank Decomposition::lowest() const {
  if (ranks_.empty()) throw DomainError("empty decomposition has no lowest rank");
  return ranks_.front();
}

std::string_view to_string(RankClass c) noexcept {
  switch (c) {
    case RankClass::kTwo: return "Two";
    case RankClass::kThreeOdd: return "ThreeOdd";
    case RankClass::kThreeEven: return "ThreeEven";
    case RankClass::kThreeBare: return "ThreeBare";
    case RankClass::kHighEven: return "HighEven";
    case RankClass::kHighOdd: return "HighOdd";
  }
  return "?";
}

Decomposition decompose(SeqValue n) {
  std::vector<FibRank> ranks;
  while (n != 0) {
    const FibRank k = fib_inv(n);
    ranks.push_back(k);
    n -= fib(k);
  }
  std::reverse(ranks.begin(), ranks.end());
  return Decomposition::canonical(std::move(ranks));
}

SeqValue sum_of(const Decomposition& d) {
  SeqValue total = 0;
  for (FibRank k : d.ranks()) total = checked_add(total, fib(k));
  return total;
}

Decomposition normalize(const Decomposition& d) {
  // Presence bitmap over ranks, with headroom for merges past kMaxRank so
  // the overflow is reported instead of indexing out of range.
  std::vector<bool> present(kMaxRank + 3, false);
  for (FibRank k : d.ranks()) present[k] = true;

  // Merging the highest pair (m, m+1) never collides: m+2 cannot be present,
  // otherwise (m+1, m+2) would have been higher. It may create a new pair
  // (m+2, m+3), which is higher still, so the scan restarts from the top.
  for (;;) {
    FibRank top = 0;
    for (FibRank m = kMaxRank; m >= 2; --m) {
      if (present[m] && present[m + 1]) {
        top = m;
        break;
      }
    }
    if (top == 0) break;
    present[top] = present[top + 1] = false;
    if (top + 2 > kMaxRank) {
      throw RankOverflow("normalization exceeds the supported rank range");
    }
    present[top + 2] = true;
  }

  std::vector<FibRank> ranks;
  for (FibRank k = 2; k <= kMaxRank; ++k) {
    if (present[k]) ranks.push_back(k);
  }
  return Decomposition::canonical(std::move(ranks));
}

FibRank low(SeqValue n) {
  if (n == 0) throw DomainError("low(0) is undefined");
  return decompose(n).lowest();
}

RankClass classify(SeqValue n) {
  if (n == 0) throw DomainError("classify(0) is undefined");
  const Decomposition d = decompose(n);
  const auto ranks = d.ranks();
  const FibRank lowest = ranks.front();
  if (lowest == 2) return RankClass::kTwo;
  if (lowest == 3) {
    if (ranks.size() == 1) return RankClass::kThreeBare;
    return ranks[1] % 2 == 1 ? RankClass::kThreeOdd : RankClass::kThreeEven;
  }
  return lowest % 2 == 0 ? RankClass::kHighEven : RankClass::kHighOdd;
}

SeqValue next_three_odd(SeqValue n) {
  // Consecutive 3-odd numbers are at most 8 apart, so the scan is short.
  for (SeqValue m = checked_add(n, 1);; m = checked_add(m, 1)) {
    if (classify(m) == RankClass::kThreeOdd) return m;
  }
}

std::string render_sum(const Decomposition& d) {
  if (d.empty()) return "0";
  std::string out;
  for (FibRank k : d.ranks()) {
    if (!out.empty()) out += '+';
    out += "F_" + std::to_string(k);
  }
  return out;
}

std::string render_ranks(const Decomposition& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(d.ranks()[i]);
  }
  return out + "]";
}

Decomposition relax_lowest(const Decomposition& d) {
  std::vector<FibRank> ranks(d.ranks().begin(), d.ranks().end());
  while (!ranks.empty() && ranks.front() >= 4) {
    const FibRank k = ranks.front();
    ranks.front() = k - 1;
    ranks.insert(ranks.begin(), k - 2);
  }
  return Decomposition::relaxed(std::move(ranks));
}

}  // namespace hofg
