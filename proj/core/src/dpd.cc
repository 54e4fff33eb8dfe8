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

#include "whsl/dpd.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace whsl {
namespace {

Integer FloorDiv(const Integer& num, std::int64_t den) {
  Integer q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

}  // namespace

FractionalDivisor::FractionalDivisor(std::int64_t genus, std::int64_t deg_e,
                                     std::vector<Branch> branches,
                                     std::vector<std::string> class_notes)
    : genus_(genus),
      deg_e_(deg_e),
      branches_(std::move(branches)),
      notes_(std::move(class_notes)) {
  if (genus_ < 0) throw std::invalid_argument("divisor genus is negative");
  for (const Branch& br : branches_) {
    if (br.q < 2 || br.p <= 0 || br.p >= br.q || std::gcd(br.p, br.q) != 1) {
      throw std::invalid_argument("bad branch " + std::to_string(br.p) + "/" +
                                  std::to_string(br.q));
    }
  }
  std::sort(branches_.begin(), branches_.end());
  if (TotalDegree(*this) <= 0) {
    throw std::invalid_argument("divisor degree must be positive");
  }
}

std::string FractionalDivisor::ToString() const {
  std::string out =
      "g=" + std::to_string(genus_) + ", degE=" + std::to_string(deg_e_) +
      ", {";
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(branches_[i].p) + "/" +
           std::to_string(branches_[i].q);
  }
  return out + "}";
}

std::strong_ordering operator<=>(const FractionalDivisor& x,
                                 const FractionalDivisor& y) {
  if (auto c = x.genus_ <=> y.genus_; c != 0) return c;
  if (auto c = x.deg_e_ <=> y.deg_e_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      x.branches_.begin(), x.branches_.end(), y.branches_.begin(),
      y.branches_.end());
}

Rational TotalDegree(const FractionalDivisor& d) {
  Rational total(d.deg_e());
  for (const Branch& br : d.branches()) total += Rational(br.p, br.q);
  return total;
}

std::vector<Rational> FractionalPart(const FractionalDivisor& d) {
  std::vector<Rational> out;
  out.reserve(d.branches().size());
  for (const Branch& br : d.branches()) out.emplace_back(br.q - 1, br.q);
  return out;
}

Integer FloorDegree(const FractionalDivisor& d, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("FloorDegree: negative multiple");
  Integer total = Integer(n) * d.deg_e();
  for (const Branch& br : d.branches()) {
    total += FloorDiv(Integer(n) * br.p, br.q);
  }
  return total;
}

CheckResult CheckGorenstein(const FractionalDivisor& d, std::int64_t alpha) {
  for (const Branch& br : d.branches()) {
    Integer residue = (Integer(alpha) * br.p + 1) % br.q;
    if (residue != 0) {
      return CheckResult::Fail(
          "congruence fails at " + std::to_string(br.p) + "/" +
          std::to_string(br.q) + ": " + std::to_string(alpha) + "*" +
          std::to_string(br.p) + " != -1 mod " + std::to_string(br.q));
    }
  }
  Rational lhs = Rational(alpha) * TotalDegree(d);
  Rational rhs(2 * d.genus() - 2);
  for (const Rational& x : FractionalPart(d)) rhs += x;
  if (lhs != rhs) {
    return CheckResult::Fail("degree mismatch: alpha deg D = " +
                             ToString(lhs) + " but 2g-2 + deg frac(D) = " +
                             ToString(rhs));
  }
  return {};
}

CheckResult CheckDuality(const FractionalDivisor& d, std::int64_t alpha) {
  const Integer canonical = 2 * d.genus() - 2;
  for (std::int64_t n = 0; n <= alpha; ++n) {
    Integer sum = FloorDegree(d, n) + FloorDegree(d, alpha - n);
    if (sum != canonical) {
      return CheckResult::Fail("duality fails at n=" + std::to_string(n) +
                               ": sum " + sum.str() + " != " +
                               canonical.str());
    }
  }
  return {};
}

CheckResult CheckShiftedFloorIdentities(const FractionalDivisor& d,
                                        std::int64_t alpha) {
  if (alpha < 1) return CheckResult::Fail("alpha must be positive");
  const Integer canonical = 2 * d.genus() - 2;
  Integer first = canonical + d.deg_e() + d.branch_count();
  if (FloorDegree(d, alpha + 1) != first) {
    return CheckResult::Fail("deg [(alpha+1)D] = " +
                             FloorDegree(d, alpha + 1).str() +
                             ", expected " + first.str());
  }
  std::int64_t big = 0;
  std::int64_t ones = 0;
  for (const Branch& br : d.branches()) {
    if (br.p >= 2) ++big;
    if (br.p == 1) ++ones;
  }
  Integer second = 2 * canonical + d.deg_e() + 2 * big + ones;
  if (FloorDegree(d, 2 * alpha + 1) != second) {
    return CheckResult::Fail("deg [(2alpha+1)D] = " +
                             FloorDegree(d, 2 * alpha + 1).str() +
                             ", expected " + second.str());
  }
  return {};
}

DimensionInterval SectionDimensionBounds(const FractionalDivisor& d,
                                         std::int64_t n) {
  const Integer deg = FloorDegree(d, n);
  const Integer g = d.genus();
  if (g == 0) {
    Integer v = deg + 1 > 0 ? Integer(deg + 1) : Integer(0);
    return {v, v};
  }
  if (deg < 0) return {0, 0};
  if (deg >= 2 * g - 1) {
    Integer v = deg - g + 1;
    return {v, v};
  }
  Integer lo = deg - g + 1 > 0 ? Integer(deg - g + 1) : Integer(0);
  Integer hi = deg == 2 * g - 2 ? g : Integer(deg + 1);
  return {lo, hi};
}

const char* ToString(DimensionVerdict verdict) {
  switch (verdict) {
    case DimensionVerdict::kConsistent:
      return "consistent";
    case DimensionVerdict::kConditional:
      return "conditional";
    case DimensionVerdict::kInconsistent:
      return "inconsistent";
  }
  return "unknown";
}

bool HasNote(const FractionalDivisor& d, std::string_view note) {
  return std::find(d.class_notes().begin(), d.class_notes().end(), note) !=
         d.class_notes().end();
}

bool FloorDivisorIsZero(const FractionalDivisor& d, std::int64_t n) {
  if (n == 0) return true;
  if (d.deg_e() != 0 || HasNote(d, kNontrivialENote)) return false;
  for (const Branch& br : d.branches()) {
    if (Integer(n) * br.p >= br.q) return false;
  }
  return true;
}

DimensionVerdict MatchDimensions(const FractionalDivisor& d,
                                 const WeightedType& wt,
                                 std::int64_t max_degree) {
  const std::vector<Integer> dims = HilbertCoefficients(wt, max_degree);
  bool conditional = false;
  for (std::int64_t n = 0; n <= max_degree; ++n) {
    DimensionInterval iv = FloorDivisorIsZero(d, n)
                               ? DimensionInterval{1, 1}
                               : SectionDimensionBounds(d, n);
    if (!iv.Contains(dims[static_cast<std::size_t>(n)])) {
      return DimensionVerdict::kInconsistent;
    }
    if (!iv.IsPoint()) conditional = true;
  }
  return conditional ? DimensionVerdict::kConditional
                     : DimensionVerdict::kConsistent;
}

void to_json(nlohmann::json& j, const FractionalDivisor& d) {
  nlohmann::json branches = nlohmann::json::array();
  for (const Branch& br : d.branches()) branches.push_back({br.p, br.q});
  j = nlohmann::json{{"genus", d.genus()},
                     {"degE", d.deg_e()},
                     {"branches", std::move(branches)},
                     {"notes", d.class_notes()}};
}

FractionalDivisor DivisorFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("divisor must be an object");
  std::vector<Branch> branches;
  for (const auto& pair : j.at("branches")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("branch must be a [p, q] pair");
    }
    branches.push_back({pair[0].get<std::int64_t>(),
                        pair[1].get<std::int64_t>()});
  }
  std::vector<std::string> notes;
  if (j.contains("notes")) notes = j.at("notes").get<std::vector<std::string>>();
  return FractionalDivisor(j.at("genus").get<std::int64_t>(),
                           j.at("degE").get<std::int64_t>(),
                           std::move(branches), std::move(notes));
}

}  // namespace whsl
