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

// Fractional divisors D = E + sum p_i/q_i P_i on a smooth curve X and the
// degree-level bookkeeping of R(X, D) = sum H^0(X, O([nD])).

#ifndef WHSL_DPD_H_
#define WHSL_DPD_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "whsl/arith.h"
#include "whsl/graded_ring.h"

namespace whsl {

struct Branch {
  std::int64_t p;
  std::int64_t q;

  // Canonical order: by q, then p.
  friend auto operator<=>(const Branch& x, const Branch& y) {
    if (auto c = x.q <=> y.q; c != 0) return c;
    return x.p <=> y.p;
  }
  friend bool operator==(const Branch&, const Branch&) = default;
};

class FractionalDivisor {
 public:
  // Sorts the branches. Throws std::invalid_argument when genus < 0, some
  // branch has p, q not coprime or outside 0 < p < q, or deg D <= 0.
  FractionalDivisor(std::int64_t genus, std::int64_t deg_e,
                    std::vector<Branch> branches,
                    std::vector<std::string> class_notes = {});

  std::int64_t genus() const { return genus_; }
  std::int64_t deg_e() const { return deg_e_; }
  const std::vector<Branch>& branches() const { return branches_; }
  const std::vector<std::string>& class_notes() const { return notes_; }
  std::int64_t branch_count() const {
    return static_cast<std::int64_t>(branches_.size());
  }

  // "g=1, degE=0, {1/2, 2/3}".
  std::string ToString() const;

  // Notes do not take part in comparisons.
  friend bool operator==(const FractionalDivisor& x,
                         const FractionalDivisor& y) {
    return x.genus_ == y.genus_ && x.deg_e_ == y.deg_e_ &&
           x.branches_ == y.branches_;
  }
  friend std::strong_ordering operator<=>(const FractionalDivisor& x,
                                          const FractionalDivisor& y);

 private:
  std::int64_t genus_;
  std::int64_t deg_e_;
  std::vector<Branch> branches_;
  std::vector<std::string> notes_;
};

// deg D = deg E + sum p_i/q_i.
Rational TotalDegree(const FractionalDivisor& d);

// The multiset {(q_i - 1)/q_i} of frac(D).
std::vector<Rational> FractionalPart(const FractionalDivisor& d);

// deg [nD] = n deg E + sum floor(n p_i / q_i). Requires n >= 0.
Integer FloorDegree(const FractionalDivisor& d, std::int64_t n);

struct CheckResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static CheckResult Fail(std::string why) { return {false, std::move(why)}; }
};

// alpha D ~ K_X + frac(D) at the level of degrees: alpha p_i = -1 (mod q_i)
// for each branch and alpha deg D = 2g - 2 + sum (q_i - 1)/q_i. Any integer
// alpha is accepted.
CheckResult CheckGorenstein(const FractionalDivisor& d, std::int64_t alpha);

// deg [nD] + deg [(alpha - n)D] = 2g - 2 for 0 <= n <= alpha.
CheckResult CheckDuality(const FractionalDivisor& d, std::int64_t alpha);

// deg [(alpha + 1)D] = 2g - 2 + deg E + r and
// deg [(2 alpha + 1)D] = 2(2g - 2) + deg E + 2 #{p_i >= 2} + #{p_i = 1}.
CheckResult CheckShiftedFloorIdentities(const FractionalDivisor& d,
                                        std::int64_t alpha);

// Closed interval [lo, hi] containing dim H^0(X, O([nD])).
struct DimensionInterval {
  Integer lo;
  Integer hi;

  bool IsPoint() const { return lo == hi; }
  bool Contains(const Integer& x) const { return lo <= x && x <= hi; }
};

DimensionInterval SectionDimensionBounds(const FractionalDivisor& d,
                                         std::int64_t n);

enum class DimensionVerdict { kConsistent, kConditional, kInconsistent };

// Class note marking an integral part of degree 0 that is not the zero
// divisor. Without it, deg E = 0 means E = 0.
inline constexpr char kNontrivialENote[] = "E !~ 0";

bool HasNote(const FractionalDivisor& d, std::string_view note);

// True when [nD] is the zero divisor: n = 0, or E = 0 and every
// floor(n p_i / q_i) vanishes. Then dim H^0 = 1.
bool FloorDivisorIsZero(const FractionalDivisor& d, std::int64_t n);

const char* ToString(DimensionVerdict verdict);

// Compares dim R_n with SectionDimensionBounds for 0 <= n <= max_degree,
// using the exact value 1 where FloorDivisorIsZero holds.
DimensionVerdict MatchDimensions(const FractionalDivisor& d,
                                 const WeightedType& wt,
                                 std::int64_t max_degree);

// {genus, degE, branches: [[p, q], ...], notes: [...]}.
void to_json(nlohmann::json& j, const FractionalDivisor& d);
FractionalDivisor DivisorFromJson(const nlohmann::json& j);

}  // namespace whsl

#endif  // WHSL_DPD_H_
