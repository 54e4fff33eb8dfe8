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

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "whsl/arith.h"
#include "whsl/dpd.h"
#include "whsl/enumerator.h"
#include "whsl/graded_ring.h"
#include "whsl/paper_cases.h"
#include "whsl/resolution.h"

namespace whsl::cli {
namespace {

using nlohmann::json;

constexpr std::int64_t kMaxUnforcedAlpha = 12;

json IntegerJson(const Integer& x) {
  try {
    return ToInt64(x);
  } catch (const std::overflow_error&) {
    return x.str();
  }
}

json TypeJson(const WeightedType& wt) {
  return {{"a", wt.a()}, {"b", wt.b()}, {"c", wt.c()}, {"h", wt.h()}};
}

void Emit(std::ostream& out, const std::string& name, json args,
          json payload) {
  json record = {{"schema_version", kSchemaVersion},
                 {"command", {{"name", name}, {"args", std::move(args)}}},
                 {"payload", std::move(payload)}};
  out << record.dump(2) << "\n";
}

std::string Join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

unsigned WorkersFrom(std::optional<unsigned> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("WHSL_WORKERS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

json EntryJson(const ClassificationEntry& e) {
  json divisors = json::array();
  for (std::size_t i = 0; i < e.divisors.size(); ++i) {
    json d = e.divisors[i];
    d["verdict"] = ToString(e.verdicts[i]);
    divisors.push_back(std::move(d));
  }
  return {{"type", TypeJson(e.type)},
          {"alpha", e.alpha},
          {"genus", IntegerJson(e.genus)},
          {"pg", IntegerJson(e.geometric_genus)},
          {"br", e.branch_count},
          {"divisors", std::move(divisors)}};
}

void EntryRows(std::ostream& out, const ClassificationEntry& e) {
  for (std::size_t i = 0; i < e.divisors.size(); ++i) {
    const FractionalDivisor& d = e.divisors[i];
    if (i == 0) {
      out << std::left << std::setw(18) << e.type.ToString() << std::setw(5)
          << e.genus.str() << std::setw(6) << e.geometric_genus.str()
          << std::setw(5) << e.branch_count;
    } else {
      out << std::setw(34) << "";
    }
    out << std::setw(13) << ToString(e.verdicts[i]) << d.ToString();
    if (!d.class_notes().empty()) out << "  [" << Join(d.class_notes(), "; ") << "]";
    out << "\n";
  }
}

void EntryHeader(std::ostream& out) {
  out << std::left << std::setw(18) << "type" << std::setw(5) << "g"
      << std::setw(6) << "p_g" << std::setw(5) << "br" << std::setw(13)
      << "verdict" << "divisor\n";
}

// invariants

struct InvariantsArgs {
  std::vector<std::int64_t> abch;
  std::optional<std::int64_t> max_n;
  std::string format = "table";
};

int RunInvariants(const InvariantsArgs& args, std::ostream& out,
                  std::ostream& err) {
  std::optional<WeightedType> wt;
  try {
    wt.emplace(args.abch[0], args.abch[1], args.abch[2], args.abch[3]);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::int64_t alpha = AInvariant(*wt);
  const std::int64_t n_max = args.max_n.value_or(wt->h());
  if (n_max < 0) {
    err << "error: --max-n must be nonnegative\n";
    return kUsage;
  }
  std::vector<Integer> dims;
  try {
    dims = HilbertCoefficients(*wt, std::max(n_max, alpha));
  } catch (const NegativeHilbertCoefficientError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::optional<Integer> genus;
  std::optional<Integer> pg;
  if (alpha >= 0) {
    genus = dims[static_cast<std::size_t>(alpha)];
    pg = Integer(0);
    for (std::int64_t n = 0; n <= alpha; ++n) *pg += dims[static_cast<std::size_t>(n)];
  }
  dims.resize(static_cast<std::size_t>(n_max) + 1);
  std::vector<std::string> violated;
  for (NormalityCondition v : NormalityViolations(*wt)) violated.push_back(ToString(v));

  if (args.format == "json") {
    json hilbert = json::array();
    for (const Integer& x : dims) hilbert.push_back(IntegerJson(x));
    json payload = {{"type", TypeJson(*wt)},
                    {"alpha", alpha},
                    {"degD", ToString(DegreeOfD(*wt))},
                    {"genus", genus ? IntegerJson(*genus) : json(nullptr)},
                    {"pg", pg ? IntegerJson(*pg) : json(nullptr)},
                    {"normality",
                     {{"pass", violated.empty()}, {"violated", violated}}},
                    {"hilbert", std::move(hilbert)}};
    Emit(out, "invariants",
         {{"a", args.abch[0]}, {"b", args.abch[1]}, {"c", args.abch[2]},
          {"h", args.abch[3]}, {"max_n", n_max}},
         std::move(payload));
    return kOk;
  }
  std::vector<std::string> coefficients;
  for (const Integer& x : dims) coefficients.push_back(x.str());
  out << "type       " << wt->ToString() << "\n"
      << "alpha      " << alpha << "\n"
      << "deg D      " << ToString(DegreeOfD(*wt)) << "\n"
      << "g          " << (genus ? genus->str() : "n/a (negative a-invariant)")
      << "\n"
      << "p_g        " << (pg ? pg->str() : "n/a (negative a-invariant)")
      << "\n"
      << "normality  "
      << (violated.empty() ? "pass" : "fail: " + Join(violated, ", ")) << "\n"
      << "dim R_n    n=0.." << n_max << ": " << Join(coefficients, " ")
      << "\n";
  return kOk;
}

// families

int RunFamilies(std::int64_t alpha, const std::string& format,
                std::ostream& out, std::ostream& err) {
  if (alpha > 0) {
    err << "error: families covers alpha <= 0; use enumerate for alpha >= 1\n";
    return kUsage;
  }
  NonpositiveClassification c = ClassifyNonpositive(alpha);
  if (format == "json") {
    json entries = json::array();
    for (const FixedEntry& e : c.entries) {
      entries.push_back({{"name", e.name},
                         {"type", TypeJson(e.type)},
                         {"degD", ToString(DegreeOfD(e.type))},
                         {"divisor", e.divisor}});
    }
    json families = json::array();
    for (const FamilyDescriptor& f : c.families) {
      families.push_back({{"name", f.name},
                          {"description", f.description},
                          {"caveat", f.caveat}});
    }
    Emit(out, "families", {{"alpha", alpha}},
         {{"alpha", alpha},
          {"entries", std::move(entries)},
          {"families", std::move(families)}});
    return kOk;
  }
  out << "alpha=" << alpha << "  entries=" << c.entries.size()
      << "  families=" << c.families.size() << "\n";
  for (const FixedEntry& e : c.entries) {
    out << std::left << std::setw(28) << e.name << std::setw(16)
        << e.type.ToString() << "deg D=" << std::setw(6)
        << ToString(DegreeOfD(e.type)) << e.divisor.ToString() << "\n";
  }
  for (const FamilyDescriptor& f : c.families) {
    out << "family " << f.name << ": " << f.description << "\n";
    if (!f.caveat.empty()) out << "  note: " << f.caveat << "\n";
  }
  return kOk;
}

// enumerate

struct EnumerateArgs {
  std::int64_t alpha = 0;
  std::string format = "table";
  std::optional<unsigned> workers;
  std::optional<std::int64_t> max_n;
  bool force = false;
};

int RunEnumerate(const EnumerateArgs& args, std::ostream& out,
                 std::ostream& err) {
  if (args.alpha <= 0) return RunFamilies(args.alpha, args.format, out, err);
  if (args.alpha > kMaxUnforcedAlpha && !args.force) {
    err << "error: alpha > " << kMaxUnforcedAlpha
        << " may run for a long time; pass --force to proceed\n";
    return kUsage;
  }
  if (args.max_n && *args.max_n < 0) {
    err << "error: --max-n must be nonnegative\n";
    return kUsage;
  }
  ClassifyOptions options;
  options.workers = WorkersFrom(args.workers);
  options.max_degree = args.max_n;
  std::vector<ClassificationEntry> entries = Classify(args.alpha, options);
  if (args.format == "json") {
    json list = json::array();
    for (const auto& e : entries) list.push_back(EntryJson(e));
    json cmd = {{"alpha", args.alpha}};
    if (args.max_n) cmd["max_n"] = *args.max_n;
    Emit(out, "enumerate", std::move(cmd),
         {{"alpha", args.alpha},
          {"count", entries.size()},
          {"entries", std::move(list)}});
    return kOk;
  }
  out << "alpha=" << args.alpha << "  entries=" << entries.size() << "\n";
  EntryHeader(out);
  for (const auto& e : entries) EntryRows(out, e);
  return kOk;
}

// resolve

struct ResolveArgs {
  std::string divisor_json;
  std::vector<std::int64_t> type;
  bool check = false;
  std::string format = "dot";
};

int RunResolve(const ResolveArgs& args, std::ostream& out,
               std::ostream& err) {
  std::vector<FractionalDivisor> divisors;
  json cmd = json::object();
  if (!args.divisor_json.empty()) {
    cmd["divisor"] = args.divisor_json;
    try {
      divisors.push_back(DivisorFromJson(json::parse(args.divisor_json)));
    } catch (const std::exception& e) {
      err << "error: bad divisor: " << e.what() << "\n";
      return kUsage;
    }
  } else {
    std::optional<WeightedType> wt;
    try {
      wt.emplace(args.type[0], args.type[1], args.type[2], args.type[3]);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    cmd["type"] = TypeJson(*wt);
    const std::int64_t alpha = AInvariant(*wt);
    if (alpha >= 1) {
      try {
        for (RealizedDivisor& r : SearchDivisors(*wt)) {
          divisors.push_back(std::move(r.divisor));
        }
      } catch (const NoGorensteinRealizationError&) {
      } catch (const NegativeHilbertCoefficientError&) {
      }
    } else {
      for (const FixedEntry& e : ClassifyNonpositive(alpha).entries) {
        if (e.type == *wt) divisors.push_back(e.divisor);
      }
      if (alpha == -1 && wt->a() == 2 && wt->c() == wt->b() + 1 &&
          wt->h() == 2 * wt->b() + 2 && wt->b() >= 2) {
        divisors.push_back(DSeriesMember(wt->b()).divisor);
      }
    }
    if (divisors.empty()) {
      err << "error: " << wt->ToString() << " has no divisor realization\n";
      return kNoRealization;
    }
  }

  std::vector<ResolutionGraph> graphs;
  for (const auto& d : divisors) graphs.push_back(BuildGraph(d));
  bool all_definite = true;
  std::vector<bool> definite;
  for (const auto& g : graphs) {
    definite.push_back(IsNegativeDefinite(IntersectionMatrix(g)));
    all_definite = all_definite && definite.back();
  }

  if (args.format == "json") {
    json list = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      json item = {{"divisor", divisors[i]}, {"graph", graphs[i]}};
      if (args.check) item["negativeDefinite"] = static_cast<bool>(definite[i]);
      list.push_back(std::move(item));
    }
    cmd["check"] = args.check;
    Emit(out, "resolve", std::move(cmd), {{"graphs", std::move(list)}});
  } else {
    for (const auto& g : graphs) out << ToDot(g);
  }
  if (args.check) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      err << "graph " << i + 1 << ": "
          << (definite[i] ? "negative definite" : "NOT negative definite")
          << "\n";
    }
    if (!all_definite) return kVerificationFailed;
  }
  return kOk;
}

// verify-paper

struct VerifyArgs {
  std::int64_t alpha = 0;
  std::string format = "table";
  std::optional<unsigned> workers;
};

int RunVerifyPaper(const VerifyArgs& args, std::ostream& out,
                   std::ostream& err) {
  if (args.alpha < 1 || args.alpha > 6) {
    err << "error: verify-paper covers 1 <= alpha <= 6\n";
    return kUsage;
  }
  ClassifyOptions options;
  options.workers = WorkersFrom(args.workers);
  std::vector<ClassificationEntry> entries = Classify(args.alpha, options);
  ReconciliationReport report = Reconcile(args.alpha, entries);

  if (args.format == "json") {
    json missing = json::array();
    for (const MissingCase& m : report.missing) {
      missing.push_back({{"case_id", m.paper_case.case_id},
                         {"type", TypeJson(m.paper_case.type)},
                         {"divisor", m.paper_case.divisor},
                         {"reason", m.reason}});
    }
    json unlisted = json::array();
    for (const auto& e : report.unlisted) unlisted.push_back(EntryJson(e));
    json rows = json::array();
    for (const RowComparison& r : report.rows) {
      rows.push_back({{"row", ToString(r.row)},
                      {"printed", r.printed},
                      {"listed", r.listed},
                      {"enumerated", r.enumerated},
                      {"unlisted", r.unlisted},
                      {"listed_ids", r.listed_ids}});
    }
    Emit(out, "verify-paper", {{"alpha", args.alpha}},
         {{"alpha", args.alpha},
          {"missing", std::move(missing)},
          {"unlisted", std::move(unlisted)},
          {"table",
           {{"rows", std::move(rows)},
            {"printed_total", report.printed_total},
            {"printed_row_sum", report.printed_row_sum},
            {"listed_total", report.listed_total},
            {"enumerated_total", report.enumerated_total}}},
          {"listing_notes", report.listing_notes},
          {"accounted", report.AccountsForEveryDiscrepancy()},
          {"passed", report.passed()}});
  } else {
    out << "verify-paper alpha=" << args.alpha << "\n";
    out << "(i) listed cases missing from the enumeration: "
        << report.missing.size() << "\n";
    for (const MissingCase& m : report.missing) {
      out << "  " << m.paper_case.case_id << " "
          << m.paper_case.type.ToString() << ": " << m.reason << "\n";
    }
    out << "(ii) enumerated entries absent from the listing: "
        << report.unlisted.size() << "\n";
    for (const auto& e : report.unlisted) {
      out << "  ";
      EntryRows(out, e);
    }
    out << "(iii) count table\n";
    out << std::left << "  " << std::setw(14) << "row" << std::setw(9)
        << "printed" << std::setw(8) << "listed" << std::setw(12)
        << "enumerated" << "unlisted\n";
    for (const RowComparison& r : report.rows) {
      out << "  " << std::setw(14) << ToString(r.row) << std::setw(9)
          << r.printed << std::setw(8) << r.listed << std::setw(12)
          << r.enumerated << r.unlisted << "\n";
      if (r.printed != r.listed) {
        out << "    printed " << r.printed << " but " << r.listed
            << " cases listed: " << Join(r.listed_ids, ", ") << "\n";
      }
    }
    out << "  " << std::setw(14) << "total" << std::setw(9)
        << report.printed_total << std::setw(8) << report.listed_total
        << std::setw(12) << report.enumerated_total << report.unlisted.size()
        << "\n";
    if (report.printed_row_sum != report.printed_total) {
      out << "    printed rows sum to " << report.printed_row_sum
          << ", printed total is " << report.printed_total << "\n";
    }
    if (!report.listing_notes.empty()) {
      out << "listing notes:\n";
      for (const auto& note : report.listing_notes) out << "  " << note << "\n";
    }
    out << "every discrepancy accounted for: "
        << (report.AccountsForEveryDiscrepancy() ? "yes" : "no") << "\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

void AddFormat(CLI::App* cmd, std::string& format,
               std::vector<std::string> choices) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(std::move(choices)));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Invariants and classification of graded hypersurface "
               "singularities k[x,y,z]/(f)",
               "whsl"};
  app.require_subcommand(1);

  InvariantsArgs inv;
  CLI::App* inv_cmd =
      app.add_subcommand("invariants", "a-invariant, deg D, g, p_g, dim R_n");
  inv_cmd->add_option("weights", inv.abch, "a b c h")->expected(4)->required();
  inv_cmd->add_option("--max-n", inv.max_n, "Last degree n of dim R_n (default h)");
  AddFormat(inv_cmd, inv.format, {"table", "json"});

  EnumerateArgs en;
  CLI::App* en_cmd =
      app.add_subcommand("enumerate", "Classify all types with a(R) = alpha");
  en_cmd->add_option("--alpha", en.alpha, "a-invariant")->required();
  en_cmd->add_option("--workers", en.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  en_cmd->add_option("--max-n", en.max_n,
                     "Degree horizon for the dimension comparison (default 3h)");
  en_cmd->add_flag("--force", en.force, "Allow alpha > 12");
  AddFormat(en_cmd, en.format, {"table", "json"});

  ResolveArgs rs;
  CLI::App* rs_cmd =
      app.add_subcommand("resolve", "Star-shaped resolution graph");
  auto* div_opt = rs_cmd->add_option("--divisor", rs.divisor_json,
                                     "Divisor as JSON {genus, degE, branches}");
  auto* type_opt =
      rs_cmd->add_option("--type", rs.type, "a b c h")->expected(4);
  div_opt->excludes(type_opt);
  rs_cmd->add_flag("--check", rs.check, "Verify negative definiteness");
  AddFormat(rs_cmd, rs.format, {"dot", "json"});

  VerifyArgs vf;
  CLI::App* vf_cmd = app.add_subcommand(
      "verify-paper", "Reconcile the enumeration with the published listing");
  vf_cmd->add_option("--alpha", vf.alpha, "a-invariant, 1..6")->required();
  vf_cmd->add_option("--workers", vf.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  AddFormat(vf_cmd, vf.format, {"table", "json"});

  std::int64_t fam_alpha = 0;
  std::string fam_format = "table";
  CLI::App* fam_cmd =
      app.add_subcommand("families", "Types with a(R) <= 0");
  fam_cmd->add_option("--alpha", fam_alpha, "a-invariant <= 0")->required();
  AddFormat(fam_cmd, fam_format, {"table", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty()
                ? app.help()
                : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "whsl 0.1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*inv_cmd) return RunInvariants(inv, out, err);
    if (*en_cmd) return RunEnumerate(en, out, err);
    if (*rs_cmd) {
      if (rs.divisor_json.empty() && rs.type.empty()) {
        err << "error: resolve needs --divisor or --type\n";
        return kUsage;
      }
      return RunResolve(rs, out, err);
    }
    if (*vf_cmd) return RunVerifyPaper(vf, out, err);
    if (*fam_cmd) return RunFamilies(fam_alpha, fam_format, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace whsl::cli
