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

#ifndef HOFG_FIBONACCI_HPP_
#define HOFG_FIBONACCI_HPP_

#include <array>
#include <cstdint>

namespace hofg {

// Index k of F_k, with F_0 = 0 and F_1 = 1.
using FibRank = unsigned;

// Every sequence value handled by the library lies in [0, 2^63).
using SeqValue = std::uint64_t;

inline constexpr SeqValue kValueLimit = SeqValue{1} << 63;
inline constexpr SeqValue kMaxValue = kValueLimit - 1;

// F_92 < 2^63 <= F_93.
inline constexpr FibRank kMaxRank = 92;

// Checked arithmetic on SeqValue. Results outside [0, 2^63) throw
// ValueOverflow.
SeqValue checked_add(SeqValue a, SeqValue b);
SeqValue checked_sub(SeqValue a, SeqValue b);

// F_k. Throws RankOverflow when k > kMaxRank.
SeqValue fib(FibRank k);

// Largest k with F_k <= n < F_{k+1}. The tie at n = 1 resolves to k = 2, so
// greedy decomposition never selects rank 1. Throws DomainError for n = 0.
FibRank fib_inv(SeqValue n);

// The whole table F_0 .. F_92, computed once by ascending iteration.
const std::array<SeqValue, kMaxRank + 1>& fib_table() noexcept;

}  // namespace hofg

#endif  // HOFG_FIBONACCI_HPP_
