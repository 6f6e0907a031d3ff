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

// Command-line front end: evaluation, sequence emission, decompositions,
// tree export, cross-validation and b-file conformance.
//
// Exit status: 0 success, 1 computation or conformance failure, 2 usage.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hofg/crossval.hpp"
#include "hofg/error.hpp"
#include "hofg/fibonacci.hpp"
#include "hofg/flip_gbar.hpp"
#include "hofg/g_func.hpp"
#include "hofg/oeis.hpp"
#include "hofg/tree.hpp"
#include "hofg/zeckendorf.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// HOFG_MAX_N, when set, caps every range the tool iterates over.
std::optional<hofg::SeqValue> RangeCap() {
  const char* raw = std::getenv("HOFG_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    throw CLI::ValidationError("HOFG_MAX_N", std::string("not a number: ") + raw);
  }
}

hofg::SeqValue Capped(hofg::SeqValue value, const char* what) {
  const auto cap = RangeCap();
  if (cap && value > *cap) {
    std::cerr << "note: " << what << " capped to " << *cap << " by HOFG_MAX_N\n";
    return *cap;
  }
  return value;
}

int Eval(const std::string& fn, hofg::SeqValue n) {
  hofg::SeqValue out = 0;
  if (fn == "g") out = hofg::g(n);
  else if (fn == "gbar") out = hofg::gbar(n);
  else if (fn == "flip") out = hofg::flip(n);
  else if (fn == "depth") out = hofg::depth(n);
  else out = hofg::low(n);
  std::cout << out << '\n';
  return 0;
}

int Seq(const std::string& fn, hofg::SeqValue from, hofg::SeqValue to,
        const std::string& format) {
  to = Capped(to, "--to");
  if (from > to) return 0;
  auto value = [&](hofg::SeqValue n) -> hofg::SeqValue {
    if (fn == "g") return hofg::g(n);
    if (fn == "gbar") return hofg::gbar(n);
    if (fn == "delta-g") return hofg::delta_g(n).bit;
    return hofg::delta_gbar(n).bit;
  };
  std::ostringstream out;
  if (format == "csv") out << "n," << fn << '\n';
  for (hofg::SeqValue n = from;; ++n) {
    if (format == "plain") out << value(n) << '\n';
    else if (format == "bfile") out << n << ' ' << value(n) << '\n';
    else out << n << ',' << value(n) << '\n';
    if (n == to) break;
  }
  std::cout << out.str();
  return 0;
}

int Decomp(hofg::SeqValue n, bool relaxed_demo) {
  const hofg::Decomposition d = hofg::decompose(n);
  std::cout << hofg::render_sum(d) << '\n' << hofg::render_ranks(d) << '\n';
  if (relaxed_demo) {
    const hofg::Decomposition relaxed = hofg::relax_lowest(d);
    const hofg::Decomposition normal = hofg::normalize(relaxed);
    std::cout << "relaxed: " << hofg::render_sum(relaxed) << ' '
              << hofg::render_ranks(relaxed) << '\n'
              << "normalized: " << hofg::render_sum(normal) << ' '
              << hofg::render_ranks(normal) << '\n';
  }
  return 0;
}

int Tree(const std::string& fn, unsigned depth) {
  const auto func = fn == "g" ? hofg::Func::kG : hofg::Func::kGBar;
  std::cout << hofg::export_dot(hofg::build_tree(func, depth));
  return 0;
}

std::vector<std::string> SplitList(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int Check(hofg::SeqValue max, const std::string& algorithms, unsigned jobs) {
  max = Capped(max, "--max");
  std::vector<std::string> names;
  if (algorithms != "all") names = SplitList(algorithms);
  const auto results = hofg::run_checks(max, names, jobs);
  std::size_t passed = 0;
  for (const hofg::CheckResult& r : results) {
    if (r.passed()) {
      ++passed;
      std::cout << "PASS " << r.name << " (" << r.checked << " checked)\n";
    } else {
      std::cout << "FAIL " << r.name << " (" << r.failures << " of " << r.checked
                << " failed, first at n=" << *r.first_failure << ")\n";
    }
  }
  std::cout << passed << "/" << results.size() << " suites passed over [0, " << max
            << "]\n";
  return passed == results.size() ? 0 : kExitFailure;
}

int Verify(const std::string& path, const std::string& fn,
           std::optional<std::int64_t> offset, unsigned jobs) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return kExitFailure;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto records = hofg::oeis::parse_bfile(buffer.str());
  const auto func = fn == "g" ? hofg::Func::kG : hofg::Func::kGBar;
  if (!offset) {
    offset = hofg::oeis::resolve_offset(records, func);
    if (!offset) {
      std::cerr << "error: no offset in [-5, 5] matches the first records; "
                   "pass --offset explicitly\n";
      return kExitFailure;
    }
  }
  const auto report = hofg::oeis::verify(records, func, *offset, jobs);
  std::cout << hofg::oeis::report_text(report)
            << "summary: " << hofg::oeis::report_json(report) << '\n';
  return report.conforms() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hofstadter G, its mirror G-bar, and Fibonacci decompositions"};
  app.require_subcommand(1, 1);

  std::string fn;
  hofg::SeqValue n = 0;
  auto* eval = app.add_subcommand("eval", "Print one value");
  eval->add_option("function", fn, "g | gbar | flip | depth | low")
      ->required()
      ->check(CLI::IsMember({"g", "gbar", "flip", "depth", "low"}));
  eval->add_option("n", n)->required();

  std::string seq_fn;
  hofg::SeqValue from = 0;
  hofg::SeqValue to = 0;
  std::string format = "plain";
  auto* seq = app.add_subcommand("seq", "Print a range of values");
  seq->add_option("function", seq_fn, "g | gbar | delta-g | delta-gbar")
      ->required()
      ->check(CLI::IsMember({"g", "gbar", "delta-g", "delta-gbar"}));
  seq->add_option("--from", from)->required();
  seq->add_option("--to", to)->required();
  seq->add_option("--format", format)->check(CLI::IsMember({"plain", "bfile", "csv"}));

  hofg::SeqValue decomp_n = 0;
  bool relaxed_demo = false;
  auto* decomp = app.add_subcommand("decomp", "Print the canonical decomposition");
  decomp->add_option("n", decomp_n)->required();
  decomp->add_flag("--relaxed-demo", relaxed_demo,
                   "Also show a relaxed form and its normalization");

  std::string tree_fn;
  unsigned tree_depth = 0;
  std::string tree_format = "dot";
  auto* tree = app.add_subcommand("tree", "Export a tree prefix");
  tree->add_option("function", tree_fn, "g | gbar")
      ->required()
      ->check(CLI::IsMember({"g", "gbar"}));
  tree->add_option("--depth", tree_depth)->required();
  tree->add_option("--format", tree_format)->check(CLI::IsMember({"dot"}));

  hofg::SeqValue check_max = 1'000'000;
  std::string algorithms = "all";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* check = app.add_subcommand("check", "Cross-validate all algorithms");
  check->add_option("--max", check_max, "Upper end of the range")->capture_default_str();
  check->add_option("--algorithms", algorithms,
                    "all, or a comma-separated list of suite names")
      ->capture_default_str();
  check->add_option("--jobs", jobs, "Worker threads");

  std::string bfile;
  std::string verify_fn;
  std::optional<std::int64_t> offset;
  auto* verify = app.add_subcommand("verify", "Compare against an OEIS b-file");
  verify->add_option("--bfile", bfile)->required();
  verify->add_option("--func", verify_fn)->required()->check(CLI::IsMember({"g", "gbar"}));
  verify->add_option("--offset", offset, "Library argument = OEIS index + offset (default: resolved from the first records)");
  verify->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) return Eval(fn, n);
    if (*seq) return Seq(seq_fn, from, to, format);
    if (*decomp) return Decomp(decomp_n, relaxed_demo);
    if (*tree) return Tree(tree_fn, tree_depth);
    if (*check) {
      if (algorithms != "all") {
        for (const std::string& name : SplitList(algorithms)) {
          bool known = false;
          for (std::string_view k : hofg::check_names()) known = known || k == name;
          if (!known) {
            std::cerr << "error: unknown suite '" << name << "'\n";
            return kExitUsage;
          }
        }
      }
      return Check(check_max, algorithms, jobs);
    }
    return Verify(bfile, verify_fn, offset, jobs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hofg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
