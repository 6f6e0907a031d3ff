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

#include "hofg/flip_gbar.hpp"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "hofg/error.hpp"
#include "hofg/zeckendorf.hpp"

namespace hofg {
namespace {

constexpr SeqValue kRange = 1'000'000;

// Oracles: G by its defining recursion, depth by literal iteration of G, and
// the mirror computed from that depth. None of them touch the library's
// G-bar code.
const std::vector<SeqValue>& NaiveG() {
  static const auto* table = [] {
    auto* v = new std::vector<SeqValue>(2 * kRange + 10, 0);
    for (SeqValue n = 1; n < v->size(); ++n) (*v)[n] = n - (*v)[(*v)[n - 1]];
    return v;
  }();
  return *table;
}

unsigned IteratedDepth(SeqValue n) {
  if (n <= 1) return 0;
  unsigned d = 0;
  while (n != 1) {
    n = NaiveG()[n];
    ++d;
  }
  return d;
}

SeqValue OracleFlip(SeqValue n) {
  if (n <= 1) return n;
  return 1 + fib(3 + IteratedDepth(n)) - n;
}

const std::vector<SeqValue>& OracleGBar() {
  static const auto* table = [] {
    auto* v = new std::vector<SeqValue>(kRange + 3);
    for (SeqValue n = 0; n < v->size(); ++n) {
      (*v)[n] = OracleFlip(NaiveG()[OracleFlip(n)]);
    }
    return v;
  }();
  return *table;
}

TEST(DepthTest, Examples) {
  EXPECT_EQ(depth(1), 0u);
  EXPECT_EQ(depth(0), 0u);
  EXPECT_EQ(depth(13), 5u);
  EXPECT_EQ(depth(9), 5u);
  EXPECT_EQ(depth(2), 1u);
}

TEST(DepthTest, MatchesLiteralIteration) {
  for (SeqValue n = 0; n <= kRange; ++n) ASSERT_EQ(depth(n), IteratedDepth(n)) << n;
}

TEST(DepthTest, FibonacciBorders) {
  for (FibRank k = 3; k <= kMaxRank; ++k) {
    ASSERT_EQ(depth(fib(k)), k - 2) << k;
    ASSERT_EQ(depth(1 + fib(k)), k - 1) << k;
  }
}

TEST(DepthTest, LevelCensus) {
  std::vector<SeqValue> census(27, 0);
  for (SeqValue n = 1; n <= fib(27); ++n) ++census[depth(n)];
  EXPECT_EQ(census[0], 1u);
  for (unsigned k = 1; k <= 25; ++k) EXPECT_EQ(census[k], fib(k)) << k;
}

TEST(FlipTest, Examples) {
  EXPECT_EQ(flip(9), 13u);
  EXPECT_EQ(flip(1), 1u);
  EXPECT_EQ(flip(0), 0u);
  EXPECT_EQ(flip(7), 7u);
  EXPECT_EQ(flip(7), OracleFlip(7));
}

TEST(FlipTest, Properties) {
  for (SeqValue n = 0; n <= kRange; ++n) {
    const SeqValue f = flip(n);
    ASSERT_EQ(f, OracleFlip(n)) << n;
    ASSERT_EQ(flip(f), n) << n;
    ASSERT_EQ(depth(f), depth(n)) << n;
    ASSERT_EQ(n > 1, f > 1) << n;
    if (n > 1 && depth(n + 1) == depth(n)) ASSERT_EQ(flip(n + 1) + 1, f) << n;
    if (n > 2 && depth(n - 1) == depth(n)) ASSERT_EQ(flip(n - 1), f + 1) << n;
  }
  for (FibRank k = 3; k < kMaxRank - 1; ++k) {
    ASSERT_EQ(flip(1 + fib(k)), fib(k + 1)) << k;
  }
}

TEST(GBarTest, Examples) {
  EXPECT_EQ(gbar(2), 1u);
  EXPECT_EQ(gbar(7), 5u);
  EXPECT_EQ(gbar(8), 5u);
  const SeqValue prefix[] = {0, 1, 1, 2};
  for (SeqValue n = 0; n < 4; ++n) EXPECT_EQ(gbar(n), prefix[n]);
}

TEST(GBarTest, PrivateTable) {
  MemoTable table(Func::kGBar);
  EXPECT_EQ(gbar(50'000, table), OracleGBar()[50'000]);
  EXPECT_EQ(gbar(3, table), 2u);
  MemoTable wrong(Func::kG);
  EXPECT_THROW(gbar(3, wrong), DomainError);
}

TEST(GBarTest, FiveRoutesAgreeWithTheMirrorOracle) {
  const auto& oracle = OracleGBar();
  const auto delta = gbar_delta_sequence(kRange);
  for (SeqValue n = 0; n <= kRange; ++n) {
    ASSERT_EQ(gbar(n), oracle[n]) << n;
    ASSERT_EQ(gbar_via_flip(n), oracle[n]) << n;
    ASSERT_EQ(delta[n], oracle[n]) << n;
    ASSERT_EQ(gbar_via_g_correction(n), oracle[n]) << n;
    ASSERT_EQ(gbar_via_complement(n), oracle[n]) << n;
  }
}

TEST(GBarTest, BeyondTheMemoLimit) {
  for (SeqValue n : {kMemoLimit, kMemoLimit + 7, kMemoLimit + 99'991}) {
    EXPECT_EQ(gbar(n), gbar_via_complement(n)) << n;
  }
}

TEST(GBarViaFlipTest, Examples) {
  EXPECT_EQ(gbar_via_flip(7), 5u);
  EXPECT_EQ(gbar_via_flip(3), 2u);
  EXPECT_EQ(gbar_via_flip(15), 10u);
}

TEST(GBarViaDeltaTest, Examples) {
  EXPECT_EQ(gbar_via_delta(4), 3u);
  EXPECT_EQ(gbar_via_delta(7), 5u);
  EXPECT_EQ(gbar_via_delta(20), 13u);
  EXPECT_EQ(gbar_via_delta(0), 0u);
}

// The derivative recurrence needs n > 2: at n = 2 it would predict
// dGb(3) = 1 - dGb(2) * dGb(Gb(3)) = 1 - 1 * 1 = 0, but Gb(4) - Gb(3) = 1.
TEST(GBarViaDeltaTest, RecurrenceFailsAtTwo) {
  const unsigned d2 = delta_gbar(2).bit;
  const unsigned d3 = delta_gbar(3).bit;
  EXPECT_NE(d3, 1 - d2 * delta_gbar(gbar(3)).bit);
  for (SeqValue n = 3; n <= kRange; ++n) {
    ASSERT_EQ(delta_gbar(n + 1).bit, 1 - delta_gbar(n).bit * delta_gbar(gbar(n + 1)).bit)
        << n;
  }
}

TEST(GBarViaCorrectionTest, Examples) {
  EXPECT_EQ(gbar_via_g_correction(7), 5u);
  EXPECT_EQ(gbar_via_g_correction(6), 4u);
  EXPECT_EQ(gbar_via_g_correction(28), 18u);
}

TEST(GBarViaComplementTest, Examples) {
  EXPECT_EQ(gbar_via_complement(7), 5u);
  EXPECT_EQ(gbar_via_complement(8), 5u);
  EXPECT_EQ(gbar_via_complement(1), 1u);
  EXPECT_EQ(gbar_via_complement(0), 0u);
}

TEST(GBarChildrenTest, Examples) {
  EXPECT_EQ(gbar_rightmost_child(5), 8u);
  // Node 3 is binary in the mirrored tree: Gb(4) = Gb(5) = 3.
  EXPECT_EQ(gbar_rightmost_child(3), 5u);
  EXPECT_EQ(gbar_leftmost_child(3), 4u);
  EXPECT_EQ(gbar_rightmost_child(9), 14u);
  EXPECT_EQ(gbar_leftmost_child(5), 7u);
  EXPECT_EQ(gbar_leftmost_child(4), 6u);
  EXPECT_EQ(gbar_leftmost_child(10), 15u);
  EXPECT_THROW(gbar_rightmost_child(1), DomainError);
  EXPECT_THROW(gbar_leftmost_child(0), DomainError);
}

// Oracle: first and last preimage of each value in the mirror table.
TEST(GBarChildrenTest, MatchPreimageScan) {
  const auto& oracle = OracleGBar();
  std::vector<SeqValue> first(oracle.size(), 0);
  std::vector<SeqValue> last(oracle.size(), 0);
  std::vector<unsigned> count(oracle.size(), 0);
  for (SeqValue m = 2; m < oracle.size(); ++m) {
    const SeqValue p = oracle[m];
    if (count[p]++ == 0) first[p] = m;
    last[p] = m;
  }
  for (SeqValue n = 2; n <= 500'000; ++n) {
    const SeqValue right = gbar_rightmost_child(n);
    const SeqValue left = gbar_leftmost_child(n);
    ASSERT_EQ(right, last[n]) << n;
    ASSERT_EQ(left, first[n]) << n;
    ASSERT_EQ(static_cast<unsigned>(gbar_arity(n)), count[n]) << n;
    ASSERT_EQ(right - left + 1, count[n]) << n;
    ASSERT_EQ(gbar(right), n);
    ASSERT_EQ(gbar(right + 1), n + 1);
    ASSERT_EQ(gbar(left - 1), n - 1);
  }
}

TEST(GBarArityTest, Examples) {
  EXPECT_EQ(gbar_arity(5), Arity::kBinary);
  EXPECT_EQ(gbar_arity(4), Arity::kUnary);
  EXPECT_EQ(gbar_arity(2), Arity::kUnary);
  EXPECT_EQ(gbar_arity(1), Arity::kUnary);
  EXPECT_EQ(gbar_arity(3), Arity::kBinary);
  EXPECT_THROW(gbar_arity(0), DomainError);
}

TEST(GBarPropertiesTest, BasicProperties) {
  for (FibRank k = 1; k + 1 <= 30; ++k) {
    ASSERT_EQ(gbar(fib(k + 1)), fib(k)) << k;
    if (k > 1) ASSERT_EQ(gbar(1 + fib(k + 1)), 1 + fib(k)) << k;
  }
  for (SeqValue n = 0; n <= kRange; ++n) {
    const SeqValue b = gbar(n);
    ASSERT_LE(b, n);
    ASSERT_LE(gbar(n + 1) - b, 1u);
    ASSERT_EQ(b == 0, n == 0);
    if (n > 1) {
      ASSERT_LT(b, n);
      ASSERT_EQ(depth(b) + 1, depth(n)) << n;
    }
    if (n >= 1 && gbar(n - 1) == b) ASSERT_EQ(gbar(n + 1), b + 1) << n;
  }
}

TEST(GBarPropertiesTest, AlternativeEquation) {
  for (SeqValue n = 4; n <= kRange; ++n) {
    ASSERT_EQ(gbar(gbar(n)) + gbar(n - 1), n) << n;
  }
}

TEST(GBarPropertiesTest, ComparisonWithG) {
  std::size_t three_odd = 0;
  for (SeqValue n = 1; n <= kRange; ++n) {
    const SeqValue diff = gbar(n) - g(n);
    const bool is_three_odd = classify(n) == RankClass::kThreeOdd;
    ASSERT_GE(gbar(n), g(n));
    ASSERT_LE(diff, 1u);
    ASSERT_EQ(diff == 1, is_three_odd) << n;
    three_odd += is_three_odd;
  }
  EXPECT_LT(static_cast<double>(three_odd) / kRange, 0.20);
}

TEST(AltEquationTablesTest, FindsNonMonotoneSolutions) {
  constexpr std::size_t kLimit = 14;
  const auto tables = alt_equation_tables(kLimit, 100'000);
  ASSERT_FALSE(tables.empty());
  std::vector<SeqValue> mirror;
  for (SeqValue n = 0; n <= kLimit; ++n) mirror.push_back(gbar(n));

  bool found_mirror = false;
  bool found_non_monotone = false;
  for (const auto& t : tables) {
    ASSERT_EQ(t.size(), kLimit + 1);
    for (SeqValue n = 4; n <= kLimit; ++n) ASSERT_EQ(t[n - 1] + t[t[n]], n);
    found_mirror = found_mirror || t == mirror;
    const bool monotone = std::is_sorted(t.begin(), t.end());
    found_non_monotone = found_non_monotone || !monotone;
    // A monotone table only has freedom in its last entry.
    if (monotone) {
      ASSERT_TRUE(std::equal(t.begin(), t.end() - 1, mirror.begin()));
    }
  }
  EXPECT_TRUE(found_mirror);
  EXPECT_TRUE(found_non_monotone);
}

TEST(AltEquationTablesTest, IncludesTheStartOfTheKnownCounterexample) {
  // f(0..7) = 0,1,1,2,3,3,5,3 satisfies the equation up to 7.
  const auto tables = alt_equation_tables(7, 1000);
  const std::vector<SeqValue> wanted = {0, 1, 1, 2, 3, 3, 5, 3};
  EXPECT_NE(std::find(tables.begin(), tables.end(), wanted), tables.end());
  EXPECT_EQ(alt_equation_tables(2, 10), (std::vector<std::vector<SeqValue>>{{0, 1, 1}}));
  EXPECT_EQ(alt_equation_tables(20, 3).size(), 3u);
}

}  // namespace
}  // namespace hofg
