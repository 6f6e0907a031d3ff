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

#include "hofg/fibonacci.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "hofg/error.hpp"

namespace hofg {
namespace {

// Oracle: the recurrence iterated from F_0 = 0, F_1 = 1 in 128-bit.
std::vector<unsigned __int128> IterateRecurrence(unsigned count) {
  std::vector<unsigned __int128> f = {0, 1};
  while (f.size() < count) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

// Oracle: largest k whose F_k <= n, by linear scan.
FibRank ScanInverse(SeqValue n) {
  const auto f = IterateRecurrence(kMaxRank + 2);
  FibRank best = 0;
  for (FibRank k = 0; k <= kMaxRank; ++k) {
    if (f[k] <= n) best = k;
  }
  return best;
}

TEST(FibTest, Examples) {
  EXPECT_EQ(fib(0), 0u);
  EXPECT_EQ(fib(1), 1u);
  EXPECT_EQ(fib(7), 13u);
  EXPECT_EQ(fib(10), 55u);
}

TEST(FibTest, MatchesIteratedRecurrence) {
  const auto f = IterateRecurrence(kMaxRank + 2);
  for (FibRank k = 0; k <= kMaxRank; ++k) {
    EXPECT_EQ(fib(k), static_cast<SeqValue>(f[k])) << "k=" << k;
  }
}

TEST(FibTest, TableEndsAtTheLastRankBelowTwoToThe63) {
  const auto f = IterateRecurrence(kMaxRank + 2);
  EXPECT_LT(f[kMaxRank], static_cast<unsigned __int128>(kValueLimit));
  EXPECT_GE(f[kMaxRank + 1], static_cast<unsigned __int128>(kValueLimit));
  EXPECT_EQ(fib(92), 7540113804746346429u);
  EXPECT_THROW(fib(93), RankOverflow);
  EXPECT_THROW(fib(1000), RankOverflow);
}

TEST(FibTest, Recurrence) {
  for (FibRank k = 0; k + 2 <= kMaxRank; ++k) {
    EXPECT_EQ(fib(k) + fib(k + 1), fib(k + 2));
  }
  for (FibRank k = 2; k < kMaxRank; ++k) EXPECT_LT(fib(k), fib(k + 1));
}

TEST(FibInvTest, Examples) {
  EXPECT_EQ(fib_inv(11), 6u);
  EXPECT_EQ(fib_inv(1), 2u);
  EXPECT_EQ(fib_inv(55), 10u);
  EXPECT_THROW(fib_inv(0), DomainError);
  EXPECT_THROW(fib_inv(kValueLimit), ValueOverflow);
}

TEST(FibInvTest, AgreesWithScanNearEveryFibonacciNumber) {
  for (FibRank k = 2; k <= kMaxRank; ++k) {
    for (SeqValue n : {fib(k) - 1, fib(k), fib(k) + 1}) {
      if (n == 0) continue;
      EXPECT_EQ(fib_inv(n), ScanInverse(n)) << "n=" << n;
    }
    EXPECT_EQ(fib_inv(fib(k)), k);
  }
  EXPECT_EQ(fib_inv(kMaxValue), kMaxRank);
}

TEST(FibInvTest, BracketsEveryValueUpToAMillion) {
  for (SeqValue n = 1; n <= 1'000'000; ++n) {
    const FibRank k = fib_inv(n);
    ASSERT_LE(fib(k), n);
    ASSERT_LT(n, fib(k + 1));
  }
}

TEST(CheckedArithmeticTest, ReportsOverflow) {
  EXPECT_EQ(checked_add(2, 3), 5u);
  EXPECT_EQ(checked_add(kMaxValue - 1, 1), kMaxValue);
  EXPECT_THROW(checked_add(kMaxValue, 1), ValueOverflow);
  EXPECT_THROW(checked_add(kValueLimit, 0), ValueOverflow);
  EXPECT_EQ(checked_sub(5, 5), 0u);
  EXPECT_THROW(checked_sub(4, 5), ValueOverflow);
}

}  // namespace
}  // namespace hofg
