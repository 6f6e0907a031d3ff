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

#include <functional>
#include <string>

#include "hofg/error.hpp"
#include "hofg/zeckendorf.hpp"

namespace hofg {

unsigned depth(SeqValue n) {
  if (n <= 1) return 0;
  // 1 + F_{k+1} <= n <= F_{k+2}  <=>  F_{k+1} <= n - 1 < F_{k+2}.
  return fib_inv(n - 1) - 1;
}

SeqValue flip(SeqValue n) {
  if (n <= 1) return n;
  return 1 + fib(3 + depth(n)) - n;
}

SeqValue gbar(SeqValue n) {
  if (n >= kMemoLimit) return gbar_via_g_correction(n);
  return shared_table(Func::kGBar)(n);
}

SeqValue gbar(SeqValue n, MemoTable& table) {
  if (table.which() != Func::kGBar) {
    throw DomainError("gbar() needs a G-bar memo table");
  }
  return table(n);
}

SeqValue gbar_via_flip(SeqValue n) { return flip(g(flip(n))); }

std::vector<SeqValue> gbar_delta_sequence(SeqValue through) {
  if (through >= kMemoLimit) {
    throw DomainError("sequence length exceeds the memo table capacity");
  }
  static constexpr SeqValue kSeeds[] = {0, 1, 1, 2, 3};
  std::vector<SeqValue> v(through + 1, 0);
  for (SeqValue m = 0; m <= through; ++m) {
    if (m < std::size(kSeeds)) {
      v[m] = kSeeds[m];
      continue;
    }
    const SeqValue n = m - 2;
    const SeqValue step = v[n + 1] - v[n];
    const SeqValue inner = v[v[n + 1] + 1] - v[v[n + 1]];
    v[m] = v[m - 1] + 1 - step * inner;
  }
  return v;
}

SeqValue gbar_via_delta(SeqValue n) { return gbar_delta_sequence(n).back(); }

SeqValue gbar_via_g_correction(SeqValue n) {
  const SeqValue base = g(n);
  if (n != 0 && classify(n) == RankClass::kThreeOdd) return base + 1;
  return base;
}

SeqValue gbar_via_complement(SeqValue n) {
  if (n <= 1) return n;
  const unsigned k = depth(n);
  const Decomposition complement = decompose(fib(k + 2) - n);
  SeqValue shifted = 0;
  bool has_two = false;
  for (FibRank rank : complement.ranks()) {
    shifted = checked_add(shifted, fib(rank - 1));
    has_two = has_two || rank == 2;
  }
  return checked_sub(fib(k + 1), shifted) + (has_two ? 1 : 0);
}

SeqValue gbar_rightmost_child(SeqValue n) {
  if (n < 2) throw DomainError("rightmost child is defined for n >= 2");
  return checked_add(n - 1, gbar(checked_add(n, 1)));
}

SeqValue gbar_leftmost_child(SeqValue n) {
  if (n < 2) throw DomainError("leftmost child is defined for n >= 2");
  const SeqValue mirrored = flip(n);
  return flip(checked_add(mirrored, g(mirrored)));
}

Arity gbar_arity(SeqValue n) {
  if (n == 0) throw DomainError("node 0 is not in the G-bar tree");
  return g_arity(flip(n));
}

DeltaBit delta_gbar(SeqValue n) {
  return DeltaBit{static_cast<unsigned>(gbar(checked_add(n, 1)) - gbar(n))};
}

std::vector<std::vector<SeqValue>> alt_equation_tables(std::size_t limit,
                                                       std::size_t max_results) {
  std::vector<SeqValue> table = {0, 1, 1, 2};
  if (limit < table.size()) {
    table.resize(limit + 1);
    return {table};
  }
  std::vector<std::vector<SeqValue>> found;
  // f(f(n)) is known when f(n) < n; f(n) = n is only possible if f(n-1) = 0.
  std::function<void()> extend = [&] {
    if (found.size() >= max_results) return;
    const SeqValue n = table.size();
    if (n > limit) {
      found.push_back(table);
      return;
    }
    for (SeqValue v = 0; v <= n; ++v) {
      const SeqValue image = v < n ? table[v] : v;
      if (table[n - 1] + image != n) continue;
      table.push_back(v);
      extend();
      table.pop_back();
    }
  };
  extend();
  return found;
}

}  // namespace hofg
