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

#ifndef WHSL_ENUMERATOR_H_
#define WHSL_ENUMERATOR_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "whsl/arith.h"
#include "whsl/dpd.h"
#include "whsl/graded_ring.h"

namespace whsl {

struct RealizedDivisor {
  FractionalDivisor divisor;
  DimensionVerdict verdict;
};

struct ClassificationEntry {
  WeightedType type;
  std::int64_t alpha;
  Integer genus;
  Integer geometric_genus;
  std::vector<FractionalDivisor> divisors;
  std::vector<DimensionVerdict> verdicts;
  // Number of branch points of the first divisor.
  std::int64_t branch_count;
};

// Raised by SearchDivisors when alpha deg D < 2g - 2.
class NoGorensteinRealizationError : public std::domain_error {
 public:
  explicit NoGorensteinRealizationError(const WeightedType& wt);
};

// All (a,b,c) with a <= b <= c, gcd 1, ab < 168 alpha, c <= a + b + alpha
// and h = a + b + c + alpha that pass the normality filter, in
// lexicographic order. Requires alpha >= 1.
std::vector<WeightedType> CandidateTypes(std::int64_t alpha);

// Multisets q_1 <= ... <= q_r with sum (1 - 1/q_i) = target, every q_i
// taken from `allowed` (sorted, each >= 2).
std::vector<std::vector<std::int64_t>> BranchOrderMultisets(
    const Rational& target, const std::vector<std::int64_t>& allowed);

// Divisors of a, b or c that are >= 2 and prime to alpha, sorted. The
// isotropy order of a point of Proj R divides one of the weights.
std::vector<std::int64_t> AdmissibleBranchOrders(const WeightedType& wt);

// "3E + P_1 ~ K_X" for g >= 1; empty for g = 0.
std::vector<std::string> CanonicalRelationNotes(const FractionalDivisor& d,
                                                std::int64_t alpha);

struct SearchOptions {
  // Horizon for MatchDimensions; 3h when unset.
  std::optional<std::int64_t> max_degree;
};

// Every canonical divisor D with deg D = h/(abc), g = dim R_alpha and
// alpha D ~ K_X + frac(D) at degree level whose section dimensions are not
// inconsistent with dim R_n. Requires a(R) >= 1.
std::vector<RealizedDivisor> SearchDivisors(const WeightedType& wt,
                                            const SearchOptions& options = {});

struct ClassifyOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  std::optional<std::int64_t> max_degree;
  // Applied to each candidate before the divisor search.
  std::function<bool(const WeightedType&)> type_filter;
};

std::vector<ClassificationEntry> Classify(std::int64_t alpha,
                                          const ClassifyOptions& options = {});

// Classification for a(R) <= 0.
struct FixedEntry {
  std::string name;
  WeightedType type;
  FractionalDivisor divisor;
};

struct FamilyDescriptor {
  std::string name;
  std::string description;
  std::string caveat;
};

struct NonpositiveClassification {
  std::int64_t alpha;
  std::vector<FixedEntry> entries;
  std::vector<FamilyDescriptor> families;
};

// Throws std::invalid_argument for alpha > 0.
NonpositiveClassification ClassifyNonpositive(std::int64_t alpha);

// Member n >= 2 of the D_{n+2} series: (2,n,n+1;2n+2),
// D = -1 + 1/2 P_1 + 1/2 P_2 + 1/n P_3 on P^1.
FixedEntry DSeriesMember(std::int64_t n);

struct PropertyReport {
  std::vector<std::string> violations;
  std::vector<std::string> details;
  bool ok() const { return violations.empty(); }
};

// p_g = 1 forces alpha <= 7, and alpha = 7 gives exactly three types.
// Checks alpha = 6..max_alpha.
PropertyReport CheckGeometricGenusOne(std::int64_t max_alpha = 12,
                                     unsigned workers = 0);

// dim R_{alpha-1} > 0 or dim R_{alpha+1} > 0 for every entry.
PropertyReport CheckNeighborNonvanishing(
    const std::vector<ClassificationEntry>& entries);

}  // namespace whsl

#endif  // WHSL_ENUMERATOR_H_
