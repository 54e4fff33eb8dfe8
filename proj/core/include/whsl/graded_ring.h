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

#ifndef WHSL_GRADED_RING_H_
#define WHSL_GRADED_RING_H_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "whsl/arith.h"

namespace whsl {

// A weight type (a,b,c;h): the degrees of x, y, z and of the defining
// polynomial f of R = k[x,y,z]/(f). The degrees are kept sorted.
class WeightedType {
 public:
  // Sorts the degrees. Throws std::invalid_argument unless all four values
  // are positive and gcd(a, b, c) = 1.
  WeightedType(std::int64_t a, std::int64_t b, std::int64_t c,
               std::int64_t h);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t h() const { return h_; }

  // "(a,b,c;h)".
  std::string ToString() const;

  friend auto operator<=>(const WeightedType&,
                          const WeightedType&) = default;

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
  std::int64_t h_;
};

// Raised by Genus and GeometricGenus on types with a(R) < 0.
class NegativeAInvariantError : public std::domain_error {
 public:
  explicit NegativeAInvariantError(const WeightedType& wt);
};

// Raised by HilbertCoefficients when the series has a negative coefficient.
class NegativeHilbertCoefficientError : public std::domain_error {
 public:
  NegativeHilbertCoefficientError(const WeightedType& wt, std::int64_t n);
};

// a(R) = h - (a + b + c).
std::int64_t AInvariant(const WeightedType& wt);

// dim R_n for 0 <= n <= max_degree, the coefficients of
// (1 - t^h) / ((1 - t^a)(1 - t^b)(1 - t^c)).
std::vector<Integer> HilbertCoefficients(const WeightedType& wt,
                                         std::int64_t max_degree);

// g = dim R_a(R).
Integer Genus(const WeightedType& wt);

// p_g = sum of dim R_n over 0 <= n <= a(R).
Integer GeometricGenus(const WeightedType& wt);

// deg D = h / (abc).
Rational DegreeOfD(const WeightedType& wt);

enum class NormalityCondition {
  // Each degree d admits a monomial x_d^m, x_d^m x_{d'} or x_d^m x_{d''}
  // of degree h.
  kMonomialExponent,
  // A prime dividing two of a, b, c divides h.
  kSharedPrimes,
  // c <= a + b + a(R).
  kDegreeBound,
};

const char* ToString(NormalityCondition condition);

// Necessary conditions for a normal hypersurface of this type. An empty
// result means every condition holds.
std::vector<NormalityCondition> NormalityViolations(const WeightedType& wt);

inline bool PassesNormalityFilter(const WeightedType& wt) {
  return NormalityViolations(wt).empty();
}

}  // namespace whsl

#endif  // WHSL_GRADED_RING_H_
