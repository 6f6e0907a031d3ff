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

#include "hofg/tree.hpp"

#include <string>

#include "hofg/error.hpp"
#include "hofg/flip_gbar.hpp"

namespace hofg {

namespace {

SeqValue Apply(Func func, SeqValue n) {
  return func == Func::kG ? g(n) : gbar(n);
}

Arity ArityOf(Func func, SeqValue n) {
  return func == Func::kG ? g_arity(n) : gbar_arity(n);
}

}  // namespace

SeqValue TreeSlice::parent(SeqValue n) const {
  if (!contains(n)) throw DomainError("label " + std::to_string(n) + " not in slice");
  return parent_[n];
}

std::vector<SeqValue> TreeSlice::children(SeqValue n) const {
  if (!contains(n)) throw DomainError("label " + std::to_string(n) + " not in slice");
  std::vector<SeqValue> out;
  for (unsigned i = 0; i < child_count_[n]; ++i) out.push_back(first_child_[n] + i);
  return out;
}

Arity TreeSlice::arity(SeqValue n) const {
  if (!contains(n)) throw DomainError("label " + std::to_string(n) + " not in slice");
  return static_cast<Arity>(arity_[n]);
}

unsigned TreeSlice::depth_of(SeqValue n) const {
  if (!contains(n)) throw DomainError("label " + std::to_string(n) + " not in slice");
  return depth(n);
}

std::pair<SeqValue, SeqValue> TreeSlice::level(unsigned k) const {
  if (k > max_depth_) throw DomainError("level beyond the slice depth");
  if (k == 0) return {1, 1};
  return {1 + fib(k + 1), fib(k + 2)};
}

TreeSlice build_tree(Func func, unsigned max_depth) {
  if (max_depth > kMaxTreeDepth) {
    throw DepthLimit("tree depth " + std::to_string(max_depth) +
                     " exceeds the limit " + std::to_string(kMaxTreeDepth));
  }
  TreeSlice slice(func, max_depth);
  const SeqValue last = fib(max_depth + 2);
  slice.parent_.assign(last + 1, 0);
  slice.first_child_.assign(last + 1, 0);
  slice.child_count_.assign(last + 1, 0);
  slice.arity_.assign(last + 1, 0);

  // Labels are breadth-first, so visiting them in order appends each child
  // right after its left sibling.
  for (SeqValue n = 1; n <= last; ++n) {
    slice.arity_[n] = static_cast<unsigned char>(ArityOf(func, n));
    if (n == 1) continue;
    const SeqValue p = Apply(func, n);
    slice.parent_[n] = p;
    if (slice.child_count_[p]++ == 0) slice.first_child_[p] = n;
  }
  return slice;
}

std::vector<SeqValue> children(Func func, SeqValue n) {
  if (n == 0) throw DomainError("node 0 is not in the tree");
  if (n == 1) return {2};
  if (func == Func::kGBar) {
    const SeqValue left = gbar_leftmost_child(n);
    const SeqValue right = gbar_rightmost_child(n);
    if (left == right) return {right};
    return {left, right};
  }
  const SeqValue right = g_max_antecedent(n);
  if (g(right - 1) == n) return {right - 1, right};
  return {right};
}

std::string export_dot(const TreeSlice& slice) {
  std::string out = "digraph ";
  out += to_string(slice.func());
  out += " {\n";
  for (SeqValue n = 1; n <= slice.last_label(); ++n) {
    out += "  " + std::to_string(n) + ";\n";
  }
  for (SeqValue n = 1; n <= slice.last_label(); ++n) {
    for (SeqValue c : slice.children(n)) {
      out += "  " + std::to_string(n) + " -> " + std::to_string(c) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace hofg
