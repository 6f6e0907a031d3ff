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

#ifndef HOFG_G_FUNC_HPP_
#define HOFG_G_FUNC_HPP_

#include <cstdint>
#include <vector>

#include "hofg/fibonacci.hpp"
#include "hofg/memo_table.hpp"

namespace hofg {

// Number of children of a node in the G or G-bar tree. The root 1 carries a
// self-loop (g(1) = 1) that is not counted, so node 1 is unary.
enum class Arity : unsigned { kUnary = 1, kBinary = 2 };

// First difference of G or G-bar; always 0 or 1.
struct DeltaBit {
  unsigned bit = 0;

  friend bool operator==(DeltaBit, DeltaBit) = default;
};

// Hofstadter's G: G(0) = 0, G(n) = n - G(G(n-1)). Memoized in the shared
// table; arguments beyond kMemoLimit go through g_via_decomposition.
SeqValue g(SeqValue n);

// Same, backed by a caller-owned table.
SeqValue g(SeqValue n, MemoTable& table);

// Shift every canonical rank down by one, turn a resulting F_1 into F_2, and
// renormalize.
SeqValue g_via_decomposition(SeqValue n);

// Values G(0..through) built forward from G(0) = 0, G(1) = 1 with
//   dG(n+1) = 1 - dG(n) * dG(G(n)).
std::vector<SeqValue> g_delta_sequence(SeqValue through);

// Last entry of g_delta_sequence(n). Linear time per call.
SeqValue g_via_delta(SeqValue n);

// floor((n+1) / phi), computed exactly with an integer square root. The
// offset n+1 is what matches G(1) = 1. DomainError for n >= 2^31.
SeqValue g_via_phi(SeqValue n);

inline constexpr SeqValue kPhiLimit = SeqValue{1} << 31;

// floor(sqrt(x)), exact.
std::uint64_t isqrt(unsigned __int128 x) noexcept;

// n + G(n), the largest m with G(m) = n.
SeqValue g_max_antecedent(SeqValue n);

// Unary iff low(n) is odd, with node 1 unary. DomainError for n = 0.
Arity g_arity(SeqValue n);

DeltaBit delta_g(SeqValue n);

}  // namespace hofg

#endif  // HOFG_G_FUNC_HPP_
