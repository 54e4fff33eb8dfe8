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

#include "whsl/enumerator.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace whsl {
namespace {

void ExtendMultisets(std::size_t slots, std::size_t start,
                     const Rational& remaining,
                     const std::vector<std::int64_t>& allowed,
                     std::vector<std::int64_t>& current,
                     std::vector<std::vector<std::int64_t>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  // The open slots need sum 1/q_i = slots - remaining, and the first of
  // them carries the largest reciprocal.
  const Rational reciprocal_sum = Rational(slots) - remaining;
  if (reciprocal_sum <= 0) return;
  for (std::size_t i = start; i < allowed.size(); ++i) {
    const std::int64_t q = allowed[i];
    if (Rational(slots, q) < reciprocal_sum) break;
    if (Rational(1, q) > reciprocal_sum) continue;
    current.push_back(q);
    ExtendMultisets(slots - 1, i, remaining - Rational(q - 1, q), allowed,
                    current, out);
    current.pop_back();
  }
}

std::string Term(std::int64_t coefficient, const std::string& symbol) {
  if (coefficient == 1) return symbol;
  return std::to_string(coefficient) + symbol;
}

unsigned ResolveWorkers(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::optional<ClassificationEntry> ClassifyType(const WeightedType& wt,
                                                const ClassifyOptions& opts) {
  std::vector<RealizedDivisor> found;
  try {
    found = SearchDivisors(wt, SearchOptions{opts.max_degree});
  } catch (const NoGorensteinRealizationError&) {
    return std::nullopt;
  } catch (const NegativeHilbertCoefficientError&) {
    return std::nullopt;
  }
  if (found.empty()) return std::nullopt;
  ClassificationEntry entry{wt,
                            AInvariant(wt),
                            Genus(wt),
                            GeometricGenus(wt),
                            {},
                            {},
                            found.front().divisor.branch_count()};
  for (RealizedDivisor& r : found) {
    entry.divisors.push_back(std::move(r.divisor));
    entry.verdicts.push_back(r.verdict);
  }
  return entry;
}

}  // namespace

NoGorensteinRealizationError::NoGorensteinRealizationError(
    const WeightedType& wt)
    : std::domain_error("alpha deg D < 2g - 2 for " + wt.ToString() +
                        "; no Gorenstein realization") {}

std::vector<WeightedType> CandidateTypes(std::int64_t alpha) {
  if (alpha < 1) throw std::invalid_argument("CandidateTypes: alpha < 1");
  const std::int64_t ab_bound = 168 * alpha;
  std::vector<WeightedType> out;
  for (std::int64_t a = 1; a * a < ab_bound; ++a) {
    for (std::int64_t b = a; a * b < ab_bound; ++b) {
      const std::int64_t gab = std::gcd(a, b);
      for (std::int64_t c = b; c <= a + b + alpha; ++c) {
        if (std::gcd(gab, c) != 1) continue;
        WeightedType wt(a, b, c, a + b + c + alpha);
        if (PassesNormalityFilter(wt)) out.push_back(wt);
      }
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> BranchOrderMultisets(
    const Rational& target, const std::vector<std::int64_t>& allowed) {
  std::vector<std::vector<std::int64_t>> out;
  if (target < 0) return out;
  std::vector<std::int64_t> current;
  // Each (q - 1)/q is at least 1/2, so r/2 <= target.
  for (std::size_t r = 0; Rational(r, 2) <= target; ++r) {
    ExtendMultisets(r, 0, target, allowed, current, out);
  }
  return out;
}

std::vector<std::int64_t> AdmissibleBranchOrders(const WeightedType& wt) {
  const std::int64_t alpha = AInvariant(wt);
  std::set<std::int64_t> orders;
  for (std::int64_t w : {wt.a(), wt.b(), wt.c()}) {
    for (std::int64_t d = 2; d <= w; ++d) {
      if (w % d == 0 && std::gcd(d, alpha) == 1) orders.insert(d);
    }
  }
  return {orders.begin(), orders.end()};
}

std::vector<std::string> CanonicalRelationNotes(const FractionalDivisor& d,
                                                std::int64_t alpha) {
  if (d.genus() == 0) return {};
  std::string lhs = Term(alpha, "E");
  for (std::size_t i = 0; i < d.branches().size(); ++i) {
    const Branch& br = d.branches()[i];
    std::int64_t coefficient = (alpha * br.p + 1) / br.q - 1;
    if (coefficient == 0) continue;
    lhs += " + " + Term(coefficient, "P_" + std::to_string(i + 1));
  }
  return {lhs + " ~ K_X"};
}

std::vector<RealizedDivisor> SearchDivisors(const WeightedType& wt,
                                            const SearchOptions& options) {
  const std::int64_t alpha = AInvariant(wt);
  if (alpha < 1) throw std::invalid_argument("SearchDivisors: alpha < 1");
  const std::int64_t genus = ToInt64(Genus(wt));
  const Rational deg_d = DegreeOfD(wt);
  const Rational target = Rational(alpha) * deg_d - Rational(2 * genus - 2);
  if (target < 0) throw NoGorensteinRealizationError(wt);
  const std::int64_t horizon = options.max_degree.value_or(3 * wt.h());

  std::vector<RealizedDivisor> out;
  for (const auto& orders :
       BranchOrderMultisets(target, AdmissibleBranchOrders(wt))) {
    std::vector<Branch> branches;
    Rational fractional = 0;
    for (std::int64_t q : orders) {
      std::int64_t p = *SolveBranchCongruence(alpha, q);
      branches.push_back({p, q});
      fractional += Rational(p, q);
    }
    const Rational deg_e = deg_d - fractional;
    if (!IsInteger(deg_e)) continue;
    FractionalDivisor divisor(genus, ToInt64(Floor(deg_e)), branches);
    if (!CheckGorenstein(divisor, alpha)) continue;
    std::vector<std::string> notes = CanonicalRelationNotes(divisor, alpha);
    DimensionVerdict verdict = MatchDimensions(divisor, wt, horizon);
    if (verdict == DimensionVerdict::kInconsistent && genus > 0 &&
        divisor.deg_e() == 0) {
      // Retry with a nontrivial degree-0 class E.
      notes.insert(notes.begin(), kNontrivialENote);
      divisor = FractionalDivisor(genus, 0, branches, notes);
      verdict = MatchDimensions(divisor, wt, horizon);
    }
    if (verdict == DimensionVerdict::kInconsistent) continue;
    out.push_back({FractionalDivisor(genus, divisor.deg_e(),
                                     divisor.branches(), std::move(notes)),
                   verdict});
  }
  std::sort(out.begin(), out.end(),
            [](const RealizedDivisor& x, const RealizedDivisor& y) {
              return x.divisor < y.divisor;
            });
  return out;
}

std::vector<ClassificationEntry> Classify(std::int64_t alpha,
                                          const ClassifyOptions& options) {
  std::vector<WeightedType> candidates = CandidateTypes(alpha);
  if (options.type_filter) {
    std::erase_if(candidates, [&](const WeightedType& wt) {
      try {
        return !options.type_filter(wt);
      } catch (const NegativeHilbertCoefficientError&) {
        return true;
      }
    });
  }
  std::vector<std::optional<ClassificationEntry>> slots(candidates.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        slots[i] = ClassifyType(candidates[i], options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<std::size_t>(
      ResolveWorkers(options.workers), std::max<std::size_t>(1, slots.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ClassificationEntry> entries;
  for (auto& slot : slots) {
    if (slot) entries.push_back(std::move(*slot));
  }
  return entries;
}

FixedEntry DSeriesMember(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("D series needs n >= 2");
  return {"D_" + std::to_string(n + 2), WeightedType(2, n, n + 1, 2 * n + 2),
          FractionalDivisor(0, -1, {{1, 2}, {1, 2}, {1, n}})};
}

NonpositiveClassification ClassifyNonpositive(std::int64_t alpha) {
  if (alpha > 0) {
    throw std::invalid_argument("ClassifyNonpositive: alpha must be <= 0");
  }
  NonpositiveClassification out{alpha, {}, {}};
  if (alpha == 0) {
    out.entries.push_back({"simple elliptic, deg D = 1",
                           WeightedType(1, 2, 3, 6),
                           FractionalDivisor(1, 1, {})});
    out.entries.push_back({"simple elliptic, deg D = 2",
                           WeightedType(1, 1, 2, 4),
                           FractionalDivisor(1, 2, {})});
    out.entries.push_back({"simple elliptic, deg D = 3",
                           WeightedType(1, 1, 1, 3),
                           FractionalDivisor(1, 3, {})});
  } else if (alpha == -1) {
    out.entries.push_back({"E_6", WeightedType(3, 4, 6, 12),
                           FractionalDivisor(0, -1, {{1, 2}, {1, 3}, {1, 3}})});
    out.entries.push_back({"E_7", WeightedType(4, 6, 9, 18),
                           FractionalDivisor(0, -1, {{1, 2}, {1, 3}, {1, 4}})});
    out.entries.push_back({"E_8", WeightedType(6, 10, 15, 30),
                           FractionalDivisor(0, -1, {{1, 2}, {1, 3}, {1, 5}})});
    out.families.push_back(
        {"D_{n+2}",
         "(2,n,n+1;2n+2) for n >= 2, D = -1 + 1/2 P_1 + 1/2 P_2 + 1/n P_3 on "
         "P^1",
         ""});
  } else {
    out.families.push_back(
        {"A_{n-1}", "k[u,v,w]/(uv - w^n), a cyclic quotient singularity",
         "the type (a,b,c;h) is not uniquely determined"});
  }
  return out;
}

PropertyReport CheckGeometricGenusOne(std::int64_t max_alpha,
                                     unsigned workers) {
  struct Expected {
    WeightedType type;
    FractionalDivisor divisor;
  };
  const std::vector<Expected> expected = {
      {WeightedType(8, 9, 12, 36),
       FractionalDivisor(0, -1, {{2, 3}, {1, 4}, {1, 8}})},
      {WeightedType(8, 10, 15, 40),
       FractionalDivisor(0, -1, {{1, 2}, {2, 5}, {2, 15}})},
      {WeightedType(8, 10, 25, 50),
       FractionalDivisor(0, -1, {{1, 2}, {2, 5}, {1, 8}})},
  };
  ClassifyOptions options;
  options.workers = workers;
  options.type_filter = [](const WeightedType& wt) {
    return GeometricGenus(wt) == 1;
  };
  PropertyReport report;
  for (std::int64_t alpha = 6; alpha <= max_alpha; ++alpha) {
    std::vector<ClassificationEntry> entries = Classify(alpha, options);
    std::string line = "alpha=" + std::to_string(alpha) + ": " +
                       std::to_string(entries.size()) + " type(s) with p_g=1";
    for (const auto& e : entries) line += " " + e.type.ToString();
    report.details.push_back(line);
    if (alpha != 7) {
      for (const auto& e : entries) {
        report.violations.push_back("unexpected p_g=1 type " +
                                    e.type.ToString() + " at alpha=" +
                                    std::to_string(alpha));
      }
      continue;
    }
    for (const Expected& want : expected) {
      auto it = std::find_if(entries.begin(), entries.end(),
                             [&](const ClassificationEntry& e) {
                               return e.type == want.type;
                             });
      if (it == entries.end()) {
        report.violations.push_back("missing " + want.type.ToString());
      } else if (std::find(it->divisors.begin(), it->divisors.end(),
                           want.divisor) == it->divisors.end()) {
        report.violations.push_back("divisor " + want.divisor.ToString() +
                                    " not realized for " +
                                    want.type.ToString());
      }
    }
    for (const auto& e : entries) {
      bool listed = std::any_of(
          expected.begin(), expected.end(),
          [&](const Expected& want) { return want.type == e.type; });
      if (!listed) {
        report.violations.push_back("extra p_g=1 type " + e.type.ToString());
      }
    }
  }
  return report;
}

PropertyReport CheckNeighborNonvanishing(
    const std::vector<ClassificationEntry>& entries) {
  PropertyReport report;
  for (const auto& e : entries) {
    std::vector<Integer> dims = HilbertCoefficients(e.type, e.alpha + 1);
    bool below = e.alpha >= 1 && dims[static_cast<std::size_t>(e.alpha - 1)] > 0;
    bool above = dims[static_cast<std::size_t>(e.alpha + 1)] > 0;
    if (!below && !above) {
      report.violations.push_back("dim R_(alpha-1) = dim R_(alpha+1) = 0 for " +
                                  e.type.ToString());
    }
  }
  report.details.push_back("checked " + std::to_string(entries.size()) +
                           " entries");
  return report;
}

}  // namespace whsl
