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

#include "hofg/crossval.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <thread>

#include "hofg/error.hpp"
#include "hofg/flip_gbar.hpp"
#include "hofg/g_func.hpp"
#include "hofg/zeckendorf.hpp"

namespace hofg {

namespace {

constexpr std::array<std::string_view, 11> kNames = {
    "g-decomposition", "g-delta",         "g-phi",
    "gbar-flip",       "gbar-delta",      "gbar-correction",
    "gbar-complement", "g-equations",     "gbar-equations",
    "rank-laws",       "zeckendorf",
};

class Tally {
 public:
  explicit Tally(std::string_view name) { result_.name = name; }

  void expect(bool ok, SeqValue n) {
    ++result_.checked;
    if (ok) return;
    ++result_.failures;
    if (!result_.first_failure) result_.first_failure = n;
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

CheckResult Equivalence(std::string_view name, SeqValue max,
                        const std::function<SeqValue(SeqValue)>& reference,
                        const std::function<SeqValue(SeqValue)>& candidate) {
  Tally t(name);
  for (SeqValue n = 0; n <= max; ++n) t.expect(reference(n) == candidate(n), n);
  return t.take();
}

CheckResult SequenceEquivalence(std::string_view name, SeqValue max,
                                const std::function<SeqValue(SeqValue)>& reference,
                                const std::vector<SeqValue>& sequence) {
  Tally t(name);
  for (SeqValue n = 0; n <= max; ++n) t.expect(reference(n) == sequence[n], n);
  return t.take();
}

CheckResult GEquations(SeqValue max) {
  Tally t("g-equations");
  for (SeqValue n = 0; n <= max; ++n) {
    const SeqValue gn = g(n);
    const SeqValue next = g(n + 1);
    bool ok = gn <= n && (next - gn <= 1) && ((gn == 0) == (n == 0));
    if (n > 1) ok = ok && gn < n;
    // Antecedent and alternative equations.
    ok = ok && g(n + gn) == n && g(n + gn + 1) == n + 1;
    ok = ok && gn + g(next - 1) == n;
    // Derivative recurrence.
    const SeqValue d0 = next - gn;
    const SeqValue d1 = g(n + 2) - next;
    ok = ok && d1 == 1 - d0 * (g(gn + 1) - g(gn));
    if (n >= 1) {
      const FibRank ln = low(n);
      ok = ok && ((next == gn) == (ln == 2));
      ok = ok && (ln % 2 == 1 ? g(n - 1) == gn : g(n - 1) + 1 == gn);
      if (ln > 2) ok = ok && low(gn) == ln - 1;
      if (ln == 2) ok = ok && low(gn) % 2 == 0;
      if (ln > 3) ok = ok && low(gn) > 2 && low(gn + 1) % 2 == 0;
      const RankClass c = classify(n);
      if (c == RankClass::kThreeEven) ok = ok && classify(gn + 1) == RankClass::kThreeOdd;
      if (c == RankClass::kThreeOdd) {
        ok = ok && (classify(gn + 1) == RankClass::kThreeEven || low(gn + 1) > 3);
      }
    }
    t.expect(ok, n);
  }
  return t.take();
}

CheckResult GBarEquations(SeqValue max) {
  Tally t("gbar-equations");
  for (SeqValue n = 0; n <= max; ++n) {
    const SeqValue b = gbar(n);
    bool ok = b <= n && gbar(n + 1) - b <= 1 && ((b == 0) == (n == 0));
    if (n > 1) ok = ok && b < n && depth(b) + 1 == depth(n);
    if (n > 3) {
      ok = ok && b == n + 1 - gbar(1 + gbar(n - 1));
      ok = ok && gbar(b) + gbar(n - 1) == n;
    }
    if (n > 2) {
      const SeqValue d0 = gbar(n + 1) - b;
      const SeqValue d1 = gbar(n + 2) - gbar(n + 1);
      const SeqValue inner = gbar(gbar(n + 1) + 1) - gbar(gbar(n + 1));
      ok = ok && d1 == 1 - d0 * inner;
    }
    const SeqValue diff = b - g(n);
    ok = ok && b >= g(n) && diff <= 1 &&
         ((diff == 1) == (n != 0 && classify(n) == RankClass::kThreeOdd));
    ok = ok && flip(flip(n)) == n && depth(flip(n)) == depth(n);
    t.expect(ok, n);
  }
  return t.take();
}

CheckResult RankLaws(SeqValue max) {
  Tally t("rank-laws");
  SeqValue previous_three_odd = 0;
  for (SeqValue n = 1; n <= max; ++n) {
    const FibRank ln = low(n);
    const FibRank next = low(n + 1);
    bool ok = true;
    if (ln == 2) ok = next % 2 == 1;
    else if (ln == 3) ok = next % 2 == 0 && next != 2;
    else ok = next == 2;
    if (n >= 2) {
      const FibRank prev = low(n - 1);
      if (ln % 2 == 1) ok = ok && prev == 2;
      else if (ln != 2) ok = ok && prev == 3;
      else ok = ok && prev > 3;
    }
    const RankClass c = classify(n);
    if (n > 2) {
      const bool three = ln == 3;
      ok = ok && ((c == RankClass::kThreeOdd) == (three && low(n - 2) % 2 == 1));
      ok = ok && ((c == RankClass::kThreeEven) == (three && low(n - 2) % 2 == 0));
    }
    if (ln % 2 == 0 && ln >= 6) ok = ok && classify(n - 1) == RankClass::kThreeOdd;
    if (c == RankClass::kThreeOdd) {
      const SeqValue gap = n - previous_three_odd;
      ok = ok && (previous_three_odd == 0 ? n == 7 : gap == 5 || gap == 8);
      previous_three_odd = n;
    }
    t.expect(ok, n);
  }
  return t.take();
}

CheckResult Zeckendorf(SeqValue max) {
  Tally t("zeckendorf");
  for (SeqValue n = 0; n <= max; ++n) {
    const Decomposition d = decompose(n);
    t.expect(sum_of(d) == n && normalize(d) == d, n);
  }
  return t.take();
}

CheckResult Run(std::string_view name, SeqValue max) {
  if (name == "g-decomposition") {
    return Equivalence(name, max, [](SeqValue n) { return g(n); }, g_via_decomposition);
  }
  if (name == "g-delta") {
    return SequenceEquivalence(name, max, [](SeqValue n) { return g(n); },
                               g_delta_sequence(max));
  }
  if (name == "g-phi") {
    return Equivalence(name, std::min(max, kPhiLimit - 1),
                       [](SeqValue n) { return g(n); }, g_via_phi);
  }
  if (name == "gbar-flip") {
    return Equivalence(name, max, [](SeqValue n) { return gbar(n); }, gbar_via_flip);
  }
  if (name == "gbar-delta") {
    return SequenceEquivalence(name, max, [](SeqValue n) { return gbar(n); },
                               gbar_delta_sequence(max));
  }
  if (name == "gbar-correction") {
    return Equivalence(name, max, [](SeqValue n) { return gbar(n); },
                       gbar_via_g_correction);
  }
  if (name == "gbar-complement") {
    return Equivalence(name, max, [](SeqValue n) { return gbar(n); },
                       gbar_via_complement);
  }
  if (name == "g-equations") return GEquations(max);
  if (name == "gbar-equations") return GBarEquations(max);
  if (name == "rank-laws") return RankLaws(max);
  return Zeckendorf(max);
}

}  // namespace

std::span<const std::string_view> check_names() noexcept { return kNames; }

std::vector<CheckResult> run_checks(SeqValue max, std::span<const std::string> names,
                                    unsigned workers) {
  std::vector<std::string_view> selected;
  if (names.empty()) {
    selected.assign(kNames.begin(), kNames.end());
  } else {
    for (std::string_view name : kNames) {
      if (std::find(names.begin(), names.end(), name) != names.end()) {
        selected.push_back(name);
      }
    }
    for (const std::string& name : names) {
      if (std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
        throw DomainError("unknown check '" + name + "'");
      }
    }
  }
  // Arguments reach at most 2 max + 2 (n + g(n) + 1, flip(n) within its level).
  if (max > kMemoLimit / 2 - 2) {
    throw DomainError("check range exceeds the memo table capacity");
  }
  shared_table(Func::kG).extend_through(2 * max + 2);
  shared_table(Func::kGBar).extend_through(2 * max + 2);

  std::vector<CheckResult> results(selected.size());
  workers = std::max(1u, workers);
  std::vector<std::jthread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < selected.size(); i += workers) {
        results[i] = Run(selected[i], max);
      }
    });
  }
  threads.clear();
  return results;
}

}  // namespace hofg
