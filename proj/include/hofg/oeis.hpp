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

#ifndef HOFG_OEIS_HPP_
#define HOFG_OEIS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hofg/fibonacci.hpp"
#include "hofg/memo_table.hpp"

namespace hofg::oeis {

struct BFileRecord {
  std::uint64_t index = 0;
  SeqValue value = 0;

  friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

// Parses OEIS b-file text: one "<index> <value>" pair per line, '#' comment
// lines and blank lines ignored, CRLF and trailing whitespace tolerated.
// Throws ParseError on malformed lines and GapError when an index is not the
// previous one plus 1.
std::vector<BFileRecord> parse_bfile(std::string_view text);

// "<index> <value>\n" per record.
std::string render_bfile(std::span<const BFileRecord> records);

struct Mismatch {
  std::uint64_t index = 0;     // OEIS index
  SeqValue argument = 0;       // library argument, index + offset
  SeqValue expected = 0;       // library value
  SeqValue actual = 0;         // b-file value
};

struct VerifyReport {
  Func func = Func::kG;
  std::int64_t offset = 0;
  std::size_t compared = 0;
  std::size_t skipped = 0;  // records whose argument falls outside [0, 2^63)
  std::optional<Mismatch> first_mismatch;

  bool conforms() const noexcept { return !first_mismatch && skipped == 0; }
};

// Compares every record against func(index + offset). The comparison may be
// split across worker threads; the report does not depend on the split.
VerifyReport verify(std::span<const BFileRecord> records, Func func,
                    std::int64_t offset, unsigned workers = 1);

// Smallest |offset| <= max_shift (ties toward positive) for which the first
// ten records all match func. Empty if none does.
std::optional<std::int64_t> resolve_offset(std::span<const BFileRecord> records,
                                           Func func, std::int64_t max_shift = 5);

// Human-readable report, one fact per line.
std::string report_text(const VerifyReport& report);

// Single-line JSON object; keys documented in README.md.
std::string report_json(const VerifyReport& report);

}  // namespace hofg::oeis

#endif  // HOFG_OEIS_HPP_
