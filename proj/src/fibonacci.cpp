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

#include <algorithm>
#include <string>

#include "hofg/error.hpp"

namespace hofg {

namespace {

constexpr std::array<SeqValue, kMaxRank + 1> MakeTable() {
  std::array<SeqValue, kMaxRank + 1> t{};
  t[0] = 0;
  t[1] = 1;
  for (FibRank k = 2; k <= kMaxRank; ++k) t[k] = t[k - 1] + t[k - 2];
  return t;
}

constexpr auto kTable = MakeTable();
static_assert(kTable[kMaxRank] < kValueLimit);
static_assert(kTable[kMaxRank - 1] + kTable[kMaxRank] >= kValueLimit);

}  // namespace

SeqValue checked_add(SeqValue a, SeqValue b) {
  if (a >= kValueLimit || b >= kValueLimit || a + b >= kValueLimit) {
    throw ValueOverflow("value overflow: " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return a + b;
}

SeqValue checked_sub(SeqValue a, SeqValue b) {
  if (b > a) {
    throw ValueOverflow("value underflow: " + std::to_string(a) + " - " +
                        std::to_string(b));
  }
  return a - b;
}

SeqValue fib(FibRank k) {
  if (k > kMaxRank) {
    throw RankOverflow("Fibonacci rank " + std::to_string(k) +
                       " exceeds the supported maximum " +
                       std::to_string(kMaxRank));
  }
  return kTable[k];
}

FibRank fib_inv(SeqValue n) {
  if (n == 0) throw DomainError("fib_inv is undefined for 0");
  if (n >= kValueLimit) {
    throw ValueOverflow("value " + std::to_string(n) + " is not below 2^63");
  }
  // First entry strictly greater than n; ranks 1 and 2 share the value 1,
  // so upper_bound lands past both and the result is never rank 1.
  auto it = std::upper_bound(kTable.begin(), kTable.end(), n);
  return static_cast<FibRank>(std::distance(kTable.begin(), it) - 1);
}

const std::array<SeqValue, kMaxRank + 1>& fib_table() noexcept {
  return kTable;
}

}  // namespace hofg
