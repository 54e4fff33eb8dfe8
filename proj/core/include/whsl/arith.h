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

#ifndef WHSL_ARITH_H_
#define WHSL_ARITH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace whsl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor and ceiling of an exact rational.
Integer Floor(const Rational& x);
Integer Ceil(const Rational& x);
bool IsInteger(const Rational& x);

// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t ToInt64(const Integer& x);

// Renders "p/q" or "n" in lowest terms.
std::string ToString(const Rational& x);
std::string ToString(const Integer& x);

// The Hirzebruch-Jung expansion q/(q-p) = b_1 - 1/(b_2 - 1/(... - 1/b_s)),
// every b_j >= 2. Requires 1 <= p < q and gcd(p, q) = 1.
std::vector<std::int64_t> HirzebruchJungExpansion(std::int64_t q,
                                                  std::int64_t p);

// Evaluates [b_1, ..., b_s] as an exact rational. Requires a nonempty list.
Rational EvaluateContinuedFraction(const std::vector<std::int64_t>& terms);

// The unique p in [1, q-1] with alpha * p == -1 (mod q), or nullopt when
// gcd(alpha, q) != 1. Requires q >= 2.
std::optional<std::int64_t> SolveBranchCongruence(std::int64_t alpha,
                                                  std::int64_t q);

}  // namespace whsl

#endif  // WHSL_ARITH_H_
