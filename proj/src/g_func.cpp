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

#include "hofg/g_func.hpp"

#include <string>

#include "hofg/error.hpp"
#include "hofg/zeckendorf.hpp"

namespace hofg {

SeqValue g(SeqValue n) {
  if (n >= kMemoLimit) return g_via_decomposition(n);
  return shared_table(Func::kG)(n);
}

SeqValue g(SeqValue n, MemoTable& table) {
  if (table.which() != Func::kG) {
    throw DomainError("g() needs a G memo table");
  }
  return table(n);
}

SeqValue g_via_decomposition(SeqValue n) {
  const Decomposition d = decompose(n);
  std::vector<FibRank> shifted;
  shifted.reserve(d.size());
  for (FibRank k : d.ranks()) shifted.push_back(k - 1);
  // F_1 = F_2, and the next rank is at least 3 after the shift.
  if (!shifted.empty() && shifted.front() == 1) shifted.front() = 2;
  return sum_of(normalize(Decomposition::relaxed(std::move(shifted))));
}

std::vector<SeqValue> g_delta_sequence(SeqValue through) {
  if (through >= kMemoLimit) {
    throw DomainError("sequence length exceeds the memo table capacity");
  }
  std::vector<SeqValue> v(through + 1, 0);
  if (through >= 1) v[1] = 1;
  for (SeqValue m = 2; m <= through; ++m) {
    const SeqValue n = m - 2;
    const SeqValue step = v[n + 1] - v[n];
    const SeqValue inner = v[v[n] + 1] - v[v[n]];
    v[m] = v[m - 1] + 1 - step * inner;
  }
  return v;
}

SeqValue g_via_delta(SeqValue n) { return g_delta_sequence(n).back(); }

std::uint64_t isqrt(unsigned __int128 x) noexcept {
  std::uint64_t root = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t candidate = root | (std::uint64_t{1} << bit);
    if (static_cast<unsigned __int128>(candidate) * candidate <= x) {
      root = candidate;
    }
  }
  return root;
}

SeqValue g_via_phi(SeqValue n) {
  if (n >= kPhiLimit) {
    throw DomainError("g_via_phi supports n < 2^31, got " + std::to_string(n));
  }
  // m / phi = (sqrt(5 m^2) - m) / 2, and sqrt(5 m^2) is irrational for m > 0,
  // so flooring the root first does not change the result.
  const unsigned __int128 m = n + 1;
  const std::uint64_t root = isqrt(5 * m * m);
  return (root - static_cast<std::uint64_t>(m)) / 2;
}

SeqValue g_max_antecedent(SeqValue n) { return checked_add(n, g(n)); }

Arity g_arity(SeqValue n) {
  if (n == 0) throw DomainError("node 0 is not in the G tree");
  if (n == 1) return Arity::kUnary;
  return low(n) % 2 == 1 ? Arity::kUnary : Arity::kBinary;
}

DeltaBit delta_g(SeqValue n) {
  return DeltaBit{static_cast<unsigned>(g(checked_add(n, 1)) - g(n))};
}

}  // namespace hofg
