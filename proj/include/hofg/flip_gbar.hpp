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

#ifndef HOFG_FLIP_GBAR_HPP_
#define HOFG_FLIP_GBAR_HPP_

#include <cstddef>
#include <vector>

#include "hofg/fibonacci.hpp"
#include "hofg/g_func.hpp"
#include "hofg/memo_table.hpp"

namespace hofg {

// Number of G iterations needed to reach 1; depth(0) = 0 by convention.
// Nodes of depth k >= 1 are exactly 1+F_{k+1} .. F_{k+2}.
unsigned depth(SeqValue n);

// Mirror of n within its tree level: 1 + F_{depth(n)+3} - n, identity on
// n <= 1. Involutive and depth-preserving.
SeqValue flip(SeqValue n);

// G-bar by its own recursion:
//   Gb(0) = 0, Gb(1) = Gb(2) = 1, Gb(3) = 2,
//   Gb(n) = n + 1 - Gb(1 + Gb(n-1))  for n > 3.
// Memoized in the shared G-bar table; arguments beyond kMemoLimit go through
// gbar_via_g_correction.
SeqValue gbar(SeqValue n);
SeqValue gbar(SeqValue n, MemoTable& table);

// flip(G(flip(n))).
SeqValue gbar_via_flip(SeqValue n);

// Values Gb(0..through) built forward from Gb(0..4) = 0,1,1,2,3 with
//   dGb(n+1) = 1 - dGb(n) * dGb(Gb(n+1))  for n > 2.
std::vector<SeqValue> gbar_delta_sequence(SeqValue through);
SeqValue gbar_via_delta(SeqValue n);

// G(n) + 1 on 3-odd numbers, G(n) elsewhere.
SeqValue gbar_via_g_correction(SeqValue n);

// With k = depth(n) and F_{k+2} - n = sum of F_i (canonical):
//   Gb(n) = F_{k+1} - sum of F_{i-1} + [F_2 is one of the terms].
// Identity on n <= 1.
SeqValue gbar_via_complement(SeqValue n);

// n - 1 + Gb(n+1). DomainError for n < 2.
SeqValue gbar_rightmost_child(SeqValue n);

// flip(flip(n) + G(flip(n))). DomainError for n < 2.
SeqValue gbar_leftmost_child(SeqValue n);

// Arity of flip(n) in the G tree. DomainError for n = 0.
Arity gbar_arity(SeqValue n);

DeltaBit delta_gbar(SeqValue n);

// All tables f(0..limit) with f(0..3) = 0,1,1,2, 0 <= f(n) <= n, satisfying
// f(n-1) + f(f(n)) = n for 4 <= n <= limit. Stops after max_results tables.
// G-bar's own prefix is one of them; most are not monotone.
std::vector<std::vector<SeqValue>> alt_equation_tables(std::size_t limit,
                                                       std::size_t max_results);

}  // namespace hofg

#endif  // HOFG_FLIP_GBAR_HPP_
