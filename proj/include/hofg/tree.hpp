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

#ifndef HOFG_TREE_HPP_
#define HOFG_TREE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hofg/fibonacci.hpp"
#include "hofg/g_func.hpp"
#include "hofg/memo_table.hpp"

namespace hofg {

inline constexpr unsigned kMaxTreeDepth = 25;

// Breadth-first labeled prefix of the G or G-bar tree: every node of depth at
// most max_depth, i.e. labels 1 .. F_{max_depth+2}. Immutable once built.
class TreeSlice {
 public:
  Func func() const noexcept { return func_; }
  unsigned max_depth() const noexcept { return max_depth_; }

  // Largest label in the slice.
  SeqValue last_label() const noexcept { return parent_.size() - 1; }
  std::size_t node_count() const noexcept { return parent_.size() - 1; }

  bool contains(SeqValue n) const noexcept {
    return n >= 1 && n <= last_label();
  }

  // Parent label; the root 1 has parent 0.
  SeqValue parent(SeqValue n) const;

  // Children inside the slice, in label order. Empty for nodes at max_depth.
  std::vector<SeqValue> children(SeqValue n) const;

  // Arity from the function itself, defined for every node in the slice.
  Arity arity(SeqValue n) const;

  unsigned depth_of(SeqValue n) const;

  // First and last label at depth k <= max_depth.
  std::pair<SeqValue, SeqValue> level(unsigned k) const;

 private:
  friend TreeSlice build_tree(Func func, unsigned max_depth);

  TreeSlice(Func func, unsigned max_depth) : func_(func), max_depth_(max_depth) {}

  Func func_;
  unsigned max_depth_;
  std::vector<SeqValue> parent_;       // indexed by label
  std::vector<SeqValue> first_child_;  // 0 when none in slice
  std::vector<unsigned char> child_count_;
  std::vector<unsigned char> arity_;
};

// DepthLimit when max_depth > kMaxTreeDepth.
TreeSlice build_tree(Func func, unsigned max_depth);

// Antecedents of n under func, in ascending order, excluding the root's
// self-loop. DomainError for n = 0.
std::vector<SeqValue> children(Func func, SeqValue n);

// Graphviz digraph with one edge per parent/child pair, nodes in label order.
std::string export_dot(const TreeSlice& slice);

}  // namespace hofg

#endif  // HOFG_TREE_HPP_
