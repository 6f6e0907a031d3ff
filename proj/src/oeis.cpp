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

#include "hofg/oeis.hpp"

#include <algorithm>
#include <charconv>
#include <thread>

#include <json.hpp>

#include "hofg/error.hpp"
#include "hofg/flip_gbar.hpp"
#include "hofg/g_func.hpp"

namespace hofg::oeis {

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::uint64_t ParseNumber(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "number out of range: " + std::string(token));
  }
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "not a non-negative decimal integer: " + std::string(token));
  }
  return value;
}

SeqValue Evaluate(Func func, SeqValue n) {
  return func == Func::kG ? g(n) : gbar(n);
}

// Library argument for an OEIS index, if it lies in the value domain.
std::optional<SeqValue> Argument(std::uint64_t index, std::int64_t offset) {
  const __int128 arg = static_cast<__int128>(index) + offset;
  if (arg < 0 || arg >= static_cast<__int128>(kValueLimit)) return std::nullopt;
  return static_cast<SeqValue>(arg);
}

struct Partial {
  std::size_t compared = 0;
  std::size_t skipped = 0;
  std::optional<Mismatch> first_mismatch;
};

Partial VerifyChunk(std::span<const BFileRecord> chunk, Func func, std::int64_t offset) {
  Partial out;
  for (const BFileRecord& r : chunk) {
    const auto arg = Argument(r.index, offset);
    if (!arg) {
      ++out.skipped;
      continue;
    }
    ++out.compared;
    const SeqValue expected = Evaluate(func, *arg);
    if (expected != r.value && !out.first_mismatch) {
      out.first_mismatch = Mismatch{r.index, *arg, expected, r.value};
    }
  }
  return out;
}

}  // namespace

std::vector<BFileRecord> parse_bfile(std::string_view text) {
  std::vector<BFileRecord> records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      std::size_t i = 0;
      while (i < line.size() && !IsSpace(line[i])) ++i;
      tokens.push_back(line.substr(0, i));
      line = Trim(line.substr(i));
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected '<index> <value>', got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    const std::uint64_t index = ParseNumber(tokens[0], line_no);
    const std::uint64_t value = ParseNumber(tokens[1], line_no);
    if (value >= kValueLimit) {
      throw ParseError(line_no, "value " + std::to_string(value) + " is not below 2^63");
    }
    if (!records.empty() && index != records.back().index + 1) {
      throw GapError(line_no, "index " + std::to_string(index) + " follows " +
                                  std::to_string(records.back().index));
    }
    records.push_back({index, value});
  }
  return records;
}

std::string render_bfile(std::span<const BFileRecord> records) {
  std::string out;
  for (const BFileRecord& r : records) {
    out += std::to_string(r.index);
    out += ' ';
    out += std::to_string(r.value);
    out += '\n';
  }
  return out;
}

VerifyReport verify(std::span<const BFileRecord> records, Func func,
                    std::int64_t offset, unsigned workers) {
  VerifyReport report;
  report.func = func;
  report.offset = offset;

  // Populate the memo table up front so the workers only read it.
  SeqValue highest = 0;
  for (const BFileRecord& r : records) {
    if (const auto arg = Argument(r.index, offset); arg && *arg < kMemoLimit) {
      highest = std::max(highest, *arg);
    }
  }
  shared_table(func).extend_through(highest);

  workers = std::max(1u, std::min<unsigned>(workers, records.size() / 1024 + 1));
  const std::size_t chunk = (records.size() + workers - 1) / workers;
  std::vector<Partial> partials(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(records.size(), w * chunk);
      const std::size_t end = std::min(records.size(), begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        partials[w] = VerifyChunk(records.subspan(begin, end - begin), func, offset);
      });
    }
  }
  // Chunks are in index order, so the first chunk with a mismatch holds the
  // earliest one.
  for (const Partial& p : partials) {
    report.compared += p.compared;
    report.skipped += p.skipped;
    if (!report.first_mismatch) report.first_mismatch = p.first_mismatch;
  }
  return report;
}

std::optional<std::int64_t> resolve_offset(std::span<const BFileRecord> records,
                                           Func func, std::int64_t max_shift) {
  const auto head = records.first(std::min<std::size_t>(records.size(), 10));
  if (head.empty()) return std::nullopt;
  for (std::int64_t magnitude = 0; magnitude <= max_shift; ++magnitude) {
    for (std::int64_t offset : {magnitude, -magnitude}) {
      const Partial p = VerifyChunk(head, func, offset);
      if (p.skipped == 0 && !p.first_mismatch) return offset;
      if (magnitude == 0) break;
    }
  }
  return std::nullopt;
}

std::string report_text(const VerifyReport& report) {
  std::string out;
  out += "function: " + std::string(to_string(report.func)) + "\n";
  out += "offset: " + std::to_string(report.offset) + "\n";
  out += "compared: " + std::to_string(report.compared) + "\n";
  if (report.skipped != 0) {
    out += "skipped: " + std::to_string(report.skipped) + "\n";
  }
  if (const auto& m = report.first_mismatch) {
    out += "first mismatch: index " + std::to_string(m->index) + " (argument " +
           std::to_string(m->argument) + "): b-file " + std::to_string(m->actual) +
           ", expected " + std::to_string(m->expected) + "\n";
  }
  out += report.conforms() ? "result: conforms\n" : "result: MISMATCH\n";
  return out;
}

std::string report_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["func"] = to_string(report.func);
  j["offset"] = report.offset;
  j["compared"] = report.compared;
  j["skipped"] = report.skipped;
  j["conforms"] = report.conforms();
  if (const auto& m = report.first_mismatch) {
    j["first_mismatch"] = {{"index", m->index},
                           {"argument", m->argument},
                           {"expected", m->expected},
                           {"actual", m->actual}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j.dump();
}

}  // namespace hofg::oeis
