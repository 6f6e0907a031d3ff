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

#include "hofg/memo_table.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "hofg/error.hpp"

namespace hofg {

std::string_view to_string(Func f) noexcept {
  return f == Func::kG ? "g" : "gbar";
}

MemoTable::MemoTable(Func which) : which_(which) {
  values_.push_back(0);
}

SeqValue MemoTable::operator()(SeqValue n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  extend_through(n);
  std::shared_lock lock(mutex_);
  return values_[n];
}

void MemoTable::extend_through(SeqValue n) {
  if (n >= kMemoLimit) {
    throw DomainError("index " + std::to_string(n) +
                      " exceeds the memo table capacity");
  }
  std::unique_lock lock(mutex_);
  if (n < values_.size()) return;
  // Grow geometrically so that ascending one-at-a-time queries stay cheap.
  const std::size_t grown = values_.size() + values_.size() / 2;
  fill_locked(std::max<std::size_t>(n + 1, std::min<std::size_t>(grown, kMemoLimit)));
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

SeqValue MemoTable::at(SeqValue n) const {
  std::shared_lock lock(mutex_);
  if (n >= values_.size()) {
    throw DomainError("index " + std::to_string(n) + " is not populated");
  }
  return values_[n];
}

void MemoTable::fill_locked(std::size_t target_size) {
  values_.reserve(target_size);
  if (which_ == Func::kG) {
    for (std::size_t n = values_.size(); n < target_size; ++n) {
      values_.push_back(n - values_[values_[n - 1]]);
    }
    return;
  }
  static constexpr SeqValue kGBarSeeds[] = {0, 1, 1, 2};
  for (std::size_t n = values_.size(); n < target_size; ++n) {
    if (n < std::size(kGBarSeeds)) {
      values_.push_back(kGBarSeeds[n]);
    } else {
      values_.push_back(n + 1 - values_[1 + values_[n - 1]]);
    }
  }
}

MemoTable& shared_table(Func which) {
  static MemoTable g_table(Func::kG);
  static MemoTable gbar_table(Func::kGBar);
  return which == Func::kG ? g_table : gbar_table;
}

}  // namespace hofg
