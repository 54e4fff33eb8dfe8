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

#include "whsl/paper_cases.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace whsl {
namespace internal {
extern const std::string_view kPaperCasesJsonl;
}  // namespace internal

namespace {

bool StartsWith(const std::string& s, std::string_view prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

std::size_t Index(TableRow row) { return static_cast<std::size_t>(row); }

}  // namespace

std::vector<PaperCase> ParsePaperCases(std::string_view jsonl) {
  std::vector<PaperCase> out;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      WeightedType wt(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>(),
                      j.at("c").get<std::int64_t>(), j.at("h").get<std::int64_t>());
      std::int64_t alpha = j.at("alpha").get<std::int64_t>();
      if (AInvariant(wt) != alpha) {
        throw std::invalid_argument("alpha does not match h - (a+b+c)");
      }
      out.push_back({j.at("case_id").get<std::string>(), alpha, wt,
                     DivisorFromJson(j),
                     j.value("notes", std::vector<std::string>{})});
    } catch (const std::exception& e) {
      throw std::invalid_argument("fixture line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }
  return out;
}

const std::vector<PaperCase>& PaperCases() {
  static const std::vector<PaperCase> cases =
      ParsePaperCases(internal::kPaperCasesJsonl);
  return cases;
}

std::vector<PaperCase> PaperCasesFor(std::int64_t alpha) {
  std::vector<PaperCase> out;
  for (const PaperCase& c : PaperCases()) {
    if (c.alpha == alpha) out.push_back(c);
  }
  return out;
}

const char* ToString(TableRow row) {
  switch (row) {
    case TableRow::kG0Br3:
      return "g=0, br=3";
    case TableRow::kG0Br4Plus:
      return "g=0, br>=4";
    case TableRow::kG1:
      return "g=1";
    case TableRow::kG2:
      return "g=2";
    case TableRow::kG3:
      return "g=3";
    case TableRow::kG4Plus:
      return "g>=4";
  }
  return "unknown";
}

std::optional<TableRow> RowOf(std::int64_t genus, std::int64_t branch_count) {
  if (genus == 0) {
    if (branch_count == 3) return TableRow::kG0Br3;
    if (branch_count >= 4) return TableRow::kG0Br4Plus;
    return std::nullopt;
  }
  if (genus == 1) return TableRow::kG1;
  if (genus == 2) return TableRow::kG2;
  if (genus == 3) return TableRow::kG3;
  return TableRow::kG4Plus;
}

PrintedTable PrintedCounts(std::int64_t alpha) {
  // Rows: g=0 br=3, g=0 br>=4, g=1, g=2, g=3, g>=4.
  static const std::array<PrintedTable, 6> kTable = {{
      {{14, 8, 6, 2, 1, 0}, 31},
      {{6, 1, 8, 2, 2, 2}, 21},
      {{7, 10, 8, 3, 2, 4}, 34},
      {{7, 2, 7, 3, 3, 6}, 28},
      {{11, 22, 8, 6, 5, 8}, 58},
      {{0, 1, 8, 0, 1, 9}, 19},
  }};
  if (alpha < 1 || alpha > 6) {
    throw std::invalid_argument("printed counts exist for 1 <= alpha <= 6");
  }
  return kTable[static_cast<std::size_t>(alpha - 1)];
}

bool ReconciliationReport::AccountsForEveryDiscrepancy() const {
  if (!missing.empty()) return false;
  for (const RowComparison& r : rows) {
    if (r.enumerated != r.listed + r.unlisted) return false;
  }
  return enumerated_total ==
         listed_total + static_cast<std::int64_t>(unlisted.size());
}

ReconciliationReport Reconcile(
    std::int64_t alpha, const std::vector<ClassificationEntry>& entries) {
  ReconciliationReport report;
  report.alpha = alpha;
  const PrintedTable printed = PrintedCounts(alpha);
  const std::vector<PaperCase> cases = PaperCasesFor(alpha);

  std::map<WeightedType, const ClassificationEntry*> by_type;
  for (const auto& e : entries) by_type.emplace(e.type, &e);

  for (const PaperCase& c : cases) {
    auto it = by_type.find(c.type);
    if (it == by_type.end()) {
      std::vector<NormalityCondition> violated = NormalityViolations(c.type);
      std::string reason = "type not enumerated";
      if (!violated.empty()) {
        reason += "; fails normality condition";
        for (NormalityCondition v : violated) reason += std::string(" ") + ToString(v);
      }
      report.missing.push_back({c, reason});
      continue;
    }
    const auto& divisors = it->second->divisors;
    if (std::find(divisors.begin(), divisors.end(), c.divisor) ==
        divisors.end()) {
      std::string reason = "divisor " + c.divisor.ToString() +
                           " not among enumerated:";
      for (const auto& d : divisors) reason += " [" + d.ToString() + "]";
      report.missing.push_back({c, reason});
    }
    for (const std::string& note : c.notes) {
      if (StartsWith(note, "corrected") || StartsWith(note, "listed twice") ||
          StartsWith(note, "label")) {
        report.listing_notes.push_back(c.case_id + ": " + note);
      }
    }
  }

  std::map<WeightedType, bool> listed_types;
  for (const PaperCase& c : cases) listed_types[c.type] = true;
  for (const auto& e : entries) {
    if (!listed_types.count(e.type)) report.unlisted.push_back(e);
  }

  std::array<RowComparison, 6> rows;
  for (TableRow row : kTableRows) {
    rows[Index(row)].row = row;
    rows[Index(row)].printed = printed.rows[Index(row)];
  }
  for (const PaperCase& c : cases) {
    if (auto row = RowOf(c.divisor.genus(), c.divisor.branch_count())) {
      rows[Index(*row)].listed++;
      rows[Index(*row)].listed_ids.push_back(c.case_id);
    }
  }
  for (const auto& e : entries) {
    if (auto row = RowOf(ToInt64(e.genus), e.branch_count)) {
      rows[Index(*row)].enumerated++;
    }
  }
  for (const auto& e : report.unlisted) {
    if (auto row = RowOf(ToInt64(e.genus), e.branch_count)) {
      rows[Index(*row)].unlisted++;
    }
  }
  report.rows.assign(rows.begin(), rows.end());
  report.printed_total = printed.total;
  for (std::int64_t v : printed.rows) report.printed_row_sum += v;
  report.listed_total = static_cast<std::int64_t>(cases.size());
  report.enumerated_total = static_cast<std::int64_t>(entries.size());
  return report;
}

}  // namespace whsl
