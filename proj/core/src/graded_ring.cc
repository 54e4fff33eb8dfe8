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

#include "whsl/graded_ring.h"

#include <algorithm>
#include <array>
#include <numeric>

namespace whsl {
namespace {

// True when every prime factor of n divides m.
bool RadicalDivides(std::int64_t n, std::int64_t m) {
  while (n > 1) {
    std::int64_t g = std::gcd(n, m);
    if (g == 1) return false;
    while (n % g == 0) n /= g;
  }
  return true;
}

}  // namespace

WeightedType::WeightedType(std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t h) {
  if (a <= 0 || b <= 0 || c <= 0 || h <= 0) {
    throw std::invalid_argument("weight type entries must be positive");
  }
  if (std::gcd(std::gcd(a, b), c) != 1) {
    throw std::invalid_argument("weight type needs gcd(a, b, c) = 1");
  }
  std::array<std::int64_t, 3> w = {a, b, c};
  std::sort(w.begin(), w.end());
  a_ = w[0];
  b_ = w[1];
  c_ = w[2];
  h_ = h;
}

std::string WeightedType::ToString() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + "," +
         std::to_string(c_) + ";" + std::to_string(h_) + ")";
}

NegativeAInvariantError::NegativeAInvariantError(const WeightedType& wt)
    : std::domain_error("negative a-invariant for " + wt.ToString()) {}

NegativeHilbertCoefficientError::NegativeHilbertCoefficientError(
    const WeightedType& wt, std::int64_t n)
    : std::domain_error("negative Hilbert coefficient in degree " +
                        std::to_string(n) + " for " + wt.ToString()) {}

std::int64_t AInvariant(const WeightedType& wt) {
  return wt.h() - (wt.a() + wt.b() + wt.c());
}

std::vector<Integer> HilbertCoefficients(const WeightedType& wt,
                                         std::int64_t max_degree) {
  if (max_degree < 0) {
    throw std::invalid_argument("HilbertCoefficients: negative degree");
  }
  std::size_t len = static_cast<std::size_t>(max_degree) + 1;
  std::vector<Integer> s(len);
  s[0] = 1;
  if (wt.h() <= max_degree) s[static_cast<std::size_t>(wt.h())] = -1;
  for (std::int64_t d : {wt.a(), wt.b(), wt.c()}) {
    std::size_t step = static_cast<std::size_t>(d);
    for (std::size_t n = step; n < len; ++n) s[n] += s[n - step];
  }
  for (std::size_t n = 0; n < len; ++n) {
    if (s[n] < 0) {
      throw NegativeHilbertCoefficientError(wt, static_cast<std::int64_t>(n));
    }
  }
  return s;
}

Integer Genus(const WeightedType& wt) {
  std::int64_t alpha = AInvariant(wt);
  if (alpha < 0) throw NegativeAInvariantError(wt);
  return HilbertCoefficients(wt, alpha).back();
}

Integer GeometricGenus(const WeightedType& wt) {
  std::int64_t alpha = AInvariant(wt);
  if (alpha < 0) throw NegativeAInvariantError(wt);
  Integer total = 0;
  for (const Integer& x : HilbertCoefficients(wt, alpha)) total += x;
  return total;
}

Rational DegreeOfD(const WeightedType& wt) {
  return Rational(Integer(wt.h()),
                  Integer(wt.a()) * Integer(wt.b()) * Integer(wt.c()));
}

const char* ToString(NormalityCondition condition) {
  switch (condition) {
    case NormalityCondition::kMonomialExponent:
      return "monomial-exponent";
    case NormalityCondition::kSharedPrimes:
      return "shared-primes";
    case NormalityCondition::kDegreeBound:
      return "degree-bound";
  }
  return "unknown";
}

std::vector<NormalityCondition> NormalityViolations(const WeightedType& wt) {
  std::vector<NormalityCondition> violated;
  const std::array<std::int64_t, 3> w = {wt.a(), wt.b(), wt.c()};
  const std::int64_t h = wt.h();

  bool exponents_ok = true;
  for (int i = 0; i < 3 && exponents_ok; ++i) {
    const std::int64_t d = w[i];
    bool found = h % d == 0;
    for (int j = 0; j < 3 && !found; ++j) {
      if (j == i) continue;
      std::int64_t rest = h - w[j];
      found = rest > 0 && rest % d == 0;
    }
    exponents_ok = found;
  }
  if (!exponents_ok) violated.push_back(NormalityCondition::kMonomialExponent);

  bool primes_ok = true;
  for (int i = 0; i < 3 && primes_ok; ++i) {
    for (int j = i + 1; j < 3 && primes_ok; ++j) {
      primes_ok = RadicalDivides(std::gcd(w[i], w[j]), h);
    }
  }
  if (!primes_ok) violated.push_back(NormalityCondition::kSharedPrimes);

  if (wt.c() > wt.a() + wt.b() + AInvariant(wt)) {
    violated.push_back(NormalityCondition::kDegreeBound);
  }
  return violated;
}

}  // namespace whsl
