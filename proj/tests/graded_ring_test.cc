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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "whsl/paper_cases.h"

namespace whsl {
namespace {

std::vector<Integer> Ints(std::initializer_list<int> xs) {
  return {xs.begin(), xs.end()};
}

TEST(WeightedTypeTest, SortsAndValidates) {
  WeightedType wt(3, 1, 2, 7);
  EXPECT_EQ(wt.a(), 1);
  EXPECT_EQ(wt.b(), 2);
  EXPECT_EQ(wt.c(), 3);
  EXPECT_EQ(wt.ToString(), "(1,2,3;7)");
  EXPECT_THROW(WeightedType(0, 1, 2, 3), std::invalid_argument);
  EXPECT_THROW(WeightedType(2, 4, 6, 12), std::invalid_argument);
  EXPECT_THROW(WeightedType(1, 1, 1, -1), std::invalid_argument);
}

TEST(AInvariantTest, Examples) {
  EXPECT_EQ(AInvariant(WeightedType(1, 2, 3, 7)), 1);
  EXPECT_EQ(AInvariant(WeightedType(1, 1, 1, 3)), 0);
  EXPECT_EQ(AInvariant(WeightedType(2, 3, 7, 17)), 5);
  EXPECT_EQ(AInvariant(WeightedType(3, 4, 6, 12)), -1);
}

TEST(AInvariantTest, PermutationInvariant) {
  EXPECT_EQ(AInvariant(WeightedType(7, 3, 2, 17)),
            AInvariant(WeightedType(2, 3, 7, 17)));
  EXPECT_EQ(WeightedType(7, 3, 2, 17), WeightedType(2, 7, 3, 17));
}

TEST(HilbertTest, Examples) {
  EXPECT_EQ(HilbertCoefficients(WeightedType(1, 1, 1, 4), 4),
            Ints({1, 3, 6, 10, 14}));
  EXPECT_EQ(HilbertCoefficients(WeightedType(1, 1, 2, 6), 2)[2], 4);
  EXPECT_EQ(HilbertCoefficients(WeightedType(5, 7, 11, 40), 0), Ints({1}));
}

TEST(HilbertTest, NegativeCoefficientSignals) {
  // Degree 1 lies below every generator but 1 - t^1 subtracts in degree 1.
  EXPECT_THROW(HilbertCoefficients(WeightedType(2, 3, 5, 1), 3),
               NegativeHilbertCoefficientError);
}

TEST(HilbertTest, MatchesLatticeCountOnFixtures) {
  for (const PaperCase& c : PaperCases()) {
    std::vector<Integer> dims = HilbertCoefficients(c.type, 3 * c.type.h());
    for (std::int64_t n = 0; n <= 3 * c.type.h(); n += 1 + n / 20) {
      ASSERT_EQ(dims[static_cast<std::size_t>(n)],
                oracle::BruteDimension(c.type, n))
          << c.case_id << " n=" << n;
    }
  }
}

TEST(HilbertTest, MatchesLatticeCountRandomized) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> weight(1, 30);
  int checked = 0;
  while (checked < 60) {
    std::int64_t a = weight(rng), b = weight(rng), c = weight(rng);
    std::int64_t h = std::uniform_int_distribution<std::int64_t>(
        a + b + c, 120)(rng);
    if (a + b + c > 120) continue;
    if (std::gcd(std::gcd(a, b), c) != 1) continue;
    WeightedType wt(a, b, c, h);
    bool oracle_nonnegative = true;
    for (std::int64_t n = 0; n <= 200; ++n) {
      oracle_nonnegative &= oracle::BruteDimension(wt, n) >= 0;
    }
    if (!oracle_nonnegative) {
      EXPECT_THROW(HilbertCoefficients(wt, 200), NegativeHilbertCoefficientError);
      continue;
    }
    std::vector<Integer> dims = HilbertCoefficients(wt, 200);
    for (std::int64_t n = 0; n <= 200; ++n) {
      ASSERT_EQ(dims[static_cast<std::size_t>(n)], oracle::BruteDimension(wt, n))
          << wt.ToString() << " n=" << n;
    }
    ++checked;
  }
}

TEST(GenusTest, Examples) {
  EXPECT_EQ(Genus(WeightedType(1, 1, 1, 4)), 3);
  EXPECT_EQ(Genus(WeightedType(1, 1, 1, 5)), 6);
  EXPECT_EQ(Genus(WeightedType(4, 5, 5, 20)), 0);
  EXPECT_THROW(Genus(WeightedType(3, 4, 6, 12)), NegativeAInvariantError);
}

TEST(GenusTest, AgreesWithEveryFixture) {
  for (const PaperCase& c : PaperCases()) {
    EXPECT_EQ(Genus(c.type), c.divisor.genus()) << c.case_id;
  }
}

TEST(GeometricGenusTest, Examples) {
  EXPECT_EQ(GeometricGenus(WeightedType(8, 9, 12, 36)), 1);
  EXPECT_EQ(GeometricGenus(WeightedType(1, 1, 1, 5)), 10);
  EXPECT_EQ(GeometricGenus(WeightedType(1, 2, 3, 6)), 1);
  EXPECT_EQ(GeometricGenus(WeightedType(1, 2, 3, 7)), 2);
  EXPECT_THROW(GeometricGenus(WeightedType(4, 6, 9, 18)),
               NegativeAInvariantError);
}

TEST(DegreeOfDTest, Examples) {
  EXPECT_EQ(DegreeOfD(WeightedType(3, 4, 5, 13)), Rational(13, 60));
  EXPECT_EQ(DegreeOfD(WeightedType(1, 1, 1, 3)), Rational(3));
  EXPECT_EQ(DegreeOfD(WeightedType(8, 10, 15, 40)), Rational(1, 30));
}

TEST(DegreeOfDTest, EquivalentExpansion) {
  for (const PaperCase& c : PaperCases()) {
    const WeightedType& w = c.type;
    Rational a(w.a()), b(w.b()), cc(w.c());
    Rational alt = Rational(AInvariant(w)) / (a * b * cc) + 1 / (a * b) +
                   1 / (a * cc) + 1 / (b * cc);
    EXPECT_EQ(DegreeOfD(w), alt) << c.case_id;
  }
}

TEST(NormalityTest, Examples) {
  EXPECT_TRUE(PassesNormalityFilter(WeightedType(2, 2, 3, 8)));
  EXPECT_EQ(NormalityViolations(WeightedType(2, 4, 5, 13)),
            (std::vector<NormalityCondition>{NormalityCondition::kMonomialExponent,
                                             NormalityCondition::kSharedPrimes}));
  EXPECT_EQ(NormalityViolations(WeightedType(1, 1, 9, 12)),
            (std::vector<NormalityCondition>{NormalityCondition::kMonomialExponent,
                                             NormalityCondition::kDegreeBound}));
  EXPECT_EQ(NormalityViolations(WeightedType(3, 5, 6, 23)),
            std::vector<NormalityCondition>{NormalityCondition::kSharedPrimes});
  EXPECT_EQ(NormalityViolations(WeightedType(2, 3, 5, 11)).front(),
            NormalityCondition::kMonomialExponent);
}

TEST(NormalityTest, EveryFixturePasses) {
  for (const PaperCase& c : PaperCases()) {
    EXPECT_TRUE(PassesNormalityFilter(c.type)) << c.case_id;
  }
}

TEST(AsymptoticTest, PartialSumsApproachDegree) {
  for (WeightedType wt : {WeightedType(1, 2, 3, 7), WeightedType(2, 3, 5, 12),
                          WeightedType(1, 1, 1, 4)}) {
    const std::int64_t n_max = 2000 * wt.a() * wt.b() * wt.c();
    Integer sum = 0;
    for (const Integer& x : HilbertCoefficients(wt, n_max)) sum += x;
    Rational ratio = Rational(sum) / (Rational(n_max) * n_max / 2);
    Rational deviation = abs(ratio - DegreeOfD(wt)) / DegreeOfD(wt);
    EXPECT_LT(deviation, Rational(2, 100)) << wt.ToString();
  }
}

}  // namespace
}  // namespace whsl
