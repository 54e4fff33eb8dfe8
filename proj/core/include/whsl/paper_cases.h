// Copyright 2026 The whsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The published case listings for 1 <= alpha <= 6 and the count table,
// embedded at build time, plus a reconciliation against Classify.

#ifndef WHSL_PAPER_CASES_H_
#define WHSL_PAPER_CASES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whsl/dpd.h"
#include "whsl/enumerator.h"
#include "whsl/graded_ring.h"

namespace whsl {

struct PaperCase {
  std::string case_id;
  std::int64_t alpha;
  WeightedType type;
  FractionalDivisor divisor;
  std::vector<std::string> notes;
};

// Parses JSON lines {case_id, alpha, a, b, c, h, genus, degE, branches,
// notes}. Throws std::invalid_argument on malformed input.
std::vector<PaperCase> ParsePaperCases(std::string_view jsonl);

// The embedded fixture, parsed once.
const std::vector<PaperCase>& PaperCases();
std::vector<PaperCase> PaperCasesFor(std::int64_t alpha);

// Rows of the count table.
enum class TableRow { kG0Br3, kG0Br4Plus, kG1, kG2, kG3, kG4Plus };
inline constexpr std::array<TableRow, 6> kTableRows = {
    TableRow::kG0Br3, TableRow::kG0Br4Plus, TableRow::kG1,
    TableRow::kG2,    TableRow::kG3,        TableRow::kG4Plus};

const char* ToString(TableRow row);

// nullopt for g = 0 with fewer than three branches.
std::optional<TableRow> RowOf(std::int64_t genus, std::int64_t branch_count);

struct PrintedTable {
  // Indexed by static_cast<int>(TableRow).
  std::array<std::int64_t, 6> rows;
  std::int64_t total;
};

// The printed table column for 1 <= alpha <= 6.
PrintedTable PrintedCounts(std::int64_t alpha);

struct MissingCase {
  PaperCase paper_case;
  std::string reason;
};

struct RowComparison {
  TableRow row;
  std::int64_t printed = 0;
  std::int64_t listed = 0;
  std::int64_t enumerated = 0;
  std::int64_t unlisted = 0;
  std::vector<std::string> listed_ids;
};

struct ReconciliationReport {
  std::int64_t alpha = 0;
  // (i) listed cases whose type or divisor shape is not enumerated.
  std::vector<MissingCase> missing;
  // (ii) enumerated types with no listed case.
  std::vector<ClassificationEntry> unlisted;
  // (iii) per-row counts.
  std::vector<RowComparison> rows;
  std::int64_t printed_total = 0;
  std::int64_t printed_row_sum = 0;
  std::int64_t listed_total = 0;
  std::int64_t enumerated_total = 0;
  // Duplicate lines and corrected entries of the listing.
  std::vector<std::string> listing_notes;

  bool passed() const { return missing.empty(); }
  // Every listed case is enumerated and, row by row, the enumerated count is
  // the listed count plus the unlisted entries of that row.
  bool AccountsForEveryDiscrepancy() const;
};

ReconciliationReport Reconcile(std::int64_t alpha,
                               const std::vector<ClassificationEntry>& entries);

}  // namespace whsl

#endif  // WHSL_PAPER_CASES_H_
