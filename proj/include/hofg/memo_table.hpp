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

#ifndef HOFG_MEMO_TABLE_HPP_
#define HOFG_MEMO_TABLE_HPP_

#include <cstddef>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "hofg/fibonacci.hpp"

namespace hofg {

enum class Func { kG, kGBar };

std::string_view to_string(Func f) noexcept;

// Largest index a memo table will hold (2^27 entries, 1 GiB). Larger
// arguments are served by the decomposition-based routes instead.
inline constexpr SeqValue kMemoLimit = SeqValue{1} << 27;

// Dense, prefix-complete cache of G or G-bar values, filled by ascending
// recursion. Index 0 is always populated.
//
// Thread safety: any number of concurrent readers, or a single writer
// extending the prefix. operator() takes the writer path only when the
// requested index is not yet populated.
class MemoTable {
 public:
  explicit MemoTable(Func which);

  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  Func which() const noexcept { return which_; }

  // Value at n, extending the table through n if needed. Throws DomainError
  // when n >= kMemoLimit.
  SeqValue operator()(SeqValue n);

  // Populates every index <= n.
  void extend_through(SeqValue n);

  // Number of populated entries.
  std::size_t size() const;

  // Value at an already populated index; DomainError otherwise.
  SeqValue at(SeqValue n) const;

 private:
  void fill_locked(std::size_t target_size);

  Func which_;
  mutable std::shared_mutex mutex_;
  std::vector<SeqValue> values_;
};

// Process-wide tables shared by g() and gbar(). They only grow.
MemoTable& shared_table(Func which);

}  // namespace hofg

#endif  // HOFG_MEMO_TABLE_HPP_
