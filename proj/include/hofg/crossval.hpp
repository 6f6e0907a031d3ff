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

#ifndef HOFG_CROSSVAL_HPP_
#define HOFG_CROSSVAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hofg/fibonacci.hpp"
#include "hofg/memo_table.hpp"

namespace hofg {

// Outcome of one cross-validation or invariant suite over [0, max].
struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<SeqValue> first_failure;

  bool passed() const noexcept { return failures == 0; }
};

// Names accepted by run_checks, in execution order.
std::span<const std::string_view> check_names() noexcept;

// Runs the named suites (all of them when names is empty) over [0, max].
// Suites are independent and run on up to `workers` threads; results come
// back in check_names() order. Throws DomainError on an unknown name.
std::vector<CheckResult> run_checks(SeqValue max,
                                    std::span<const std::string> names = {},
                                    unsigned workers = 1);

}  // namespace hofg

#endif  // HOFG_CROSSVAL_HPP_
