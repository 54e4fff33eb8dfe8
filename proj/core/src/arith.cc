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

#include "whsl/arith.h"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace whsl {

Integer Floor(const Rational& x) {
  const Integer& num = boost::multiprecision::numerator(x);
  const Integer& den = boost::multiprecision::denominator(x);
  Integer q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Integer Ceil(const Rational& x) {
  const Integer& num = boost::multiprecision::numerator(x);
  const Integer& den = boost::multiprecision::denominator(x);
  Integer q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

bool IsInteger(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

std::int64_t ToInt64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " +
                              x.str());
  }
  return static_cast<std::int64_t>(x);
}

std::string ToString(const Rational& x) {
  if (IsInteger(x)) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

std::string ToString(const Integer& x) { return x.str(); }

std::vector<std::int64_t> HirzebruchJungExpansion(std::int64_t q,
                                                  std::int64_t p) {
  if (q < 2 || p < 1 || p >= q || std::gcd(p, q) != 1) {
    throw std::invalid_argument("HirzebruchJungExpansion: need 1 <= p < q, "
                                "gcd(p, q) = 1");
  }
  // x = num/den > 1; b = ceil(x); next x = den/(b*den - num).
  std::int64_t num = q;
  std::int64_t den = q - p;
  std::vector<std::int64_t> terms;
  while (true) {
    std::int64_t b = (num + den - 1) / den;
    terms.push_back(b);
    std::int64_t rest = b * den - num;
    if (rest == 0) break;
    num = den;
    den = rest;
  }
  return terms;
}

Rational EvaluateContinuedFraction(const std::vector<std::int64_t>& terms) {
  if (terms.empty()) {
    throw std::invalid_argument("EvaluateContinuedFraction: empty list");
  }
  Rational x(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    x = Rational(*it) - 1 / x;
  }
  return x;
}

std::optional<std::int64_t> SolveBranchCongruence(std::int64_t alpha,
                                                  std::int64_t q) {
  if (q < 2) {
    throw std::invalid_argument("SolveBranchCongruence: need q >= 2");
  }
  std::int64_t a = ((alpha % q) + q) % q;
  // Extended Euclid on (a, q).
  std::int64_t old_r = a, r = q;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t t = old_r / r;
    std::int64_t next_r = old_r - t * r;
    old_r = r;
    r = next_r;
    std::int64_t next_s = old_s - t * s;
    old_s = s;
    s = next_s;
  }
  if (old_r != 1) return std::nullopt;
  std::int64_t inverse = ((old_s % q) + q) % q;
  std::int64_t p = (q - inverse) % q;
  return p;
}

}  // namespace whsl
