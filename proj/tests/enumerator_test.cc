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
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "oracles.h"
#include "whsl/resolution.h"

namespace whsl {
namespace {

bool Contains(const std::vector<WeightedType>& v, const WeightedType& wt) {
  return std::find(v.begin(), v.end(), wt) != v.end();
}

const std::vector<ClassificationEntry>& Classified(std::int64_t alpha) {
  static std::map<std::int64_t, std::vector<ClassificationEntry>> cache;
  auto it = cache.find(alpha);
  if (it == cache.end()) it = cache.emplace(alpha, Classify(alpha)).first;
  return it->second;
}

TEST(CandidateTypesTest, Examples) {
  std::vector<WeightedType> one = CandidateTypes(1);
  EXPECT_TRUE(Contains(one, WeightedType(1, 2, 3, 7)));
  EXPECT_TRUE(Contains(one, WeightedType(1, 1, 1, 4)));
  EXPECT_FALSE(Contains(one, WeightedType(1, 1, 9, 12)));
  EXPECT_TRUE(std::is_sorted(one.begin(), one.end()));
  EXPECT_EQ(std::set<WeightedType>(one.begin(), one.end()).size(), one.size());
  EXPECT_TRUE(Contains(CandidateTypes(7), WeightedType(8, 9, 12, 36)));
  EXPECT_THROW(CandidateTypes(0), std::invalid_argument);
}

TEST(CandidateTypesTest, RespectsBounds) {
  for (std::int64_t alpha = 1; alpha <= 3; ++alpha) {
    for (const WeightedType& wt : CandidateTypes(alpha)) {
      EXPECT_LT(wt.a() * wt.b(), 168 * alpha);
      EXPECT_LE(wt.c(), wt.a() + wt.b() + alpha);
      EXPECT_EQ(AInvariant(wt), alpha);
      EXPECT_TRUE(PassesNormalityFilter(wt));
    }
  }
}

TEST(BranchOrderMultisetsTest, SmallTargets) {
  using Sets = std::vector<std::vector<std::int64_t>>;
  EXPECT_EQ(BranchOrderMultisets(Rational(0), {2, 3}), Sets({{}}));
  EXPECT_EQ(BranchOrderMultisets(Rational(7, 6), {2, 3, 4, 6}),
            Sets({{2, 3}}));
  EXPECT_EQ(BranchOrderMultisets(Rational(3, 2), {2, 3, 4, 5, 6}),
            Sets({{3, 6}, {4, 4}, {2, 2, 2}}));
  EXPECT_TRUE(BranchOrderMultisets(Rational(-1), {2}).empty());
}

TEST(BranchOrderMultisetsTest, MatchesExhaustiveSearch) {
  const std::vector<std::int64_t> allowed = {2, 3, 4, 5, 6, 8, 10, 12};
  for (int num = 0; num <= 24; ++num) {
    Rational target(num, 6);
    std::set<std::vector<std::int64_t>> want;
    // All nondecreasing sequences of length <= 2 * target.
    std::vector<std::int64_t> cur;
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t start,
                                                        Rational sum) {
      if (sum == target) want.insert(cur);
      if (sum >= target) return;
      for (std::size_t i = start; i < allowed.size(); ++i) {
        cur.push_back(allowed[i]);
        rec(i, sum + Rational(allowed[i] - 1, allowed[i]));
        cur.pop_back();
      }
    };
    rec(0, 0);
    auto got = BranchOrderMultisets(target, allowed);
    EXPECT_EQ(std::set<std::vector<std::int64_t>>(got.begin(), got.end()), want)
        << num << "/6";
    EXPECT_EQ(got.size(), want.size());
  }
}

TEST(SearchDivisorsTest, Examples) {
  auto a = SearchDivisors(WeightedType(1, 2, 3, 7));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].divisor, FractionalDivisor(1, 0, {{1, 2}, {2, 3}}));
  EXPECT_EQ(a[0].verdict, DimensionVerdict::kConsistent);

  auto b = SearchDivisors(WeightedType(1, 1, 1, 4));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].divisor, FractionalDivisor(3, 4, {}));
  EXPECT_EQ(b[0].divisor.class_notes(), std::vector<std::string>{"E ~ K_X"});

  auto c = SearchDivisors(WeightedType(8, 9, 12, 36));
  EXPECT_NE(std::find_if(c.begin(), c.end(),
                         [](const RealizedDivisor& r) {
                           return r.divisor ==
                                  FractionalDivisor(0, -1, {{2, 3}, {1, 4}, {1, 8}});
                         }),
            c.end());

  auto d = SearchDivisors(WeightedType(2, 3, 7, 14));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].divisor, FractionalDivisor(1, 0, {{1, 3}}));
  EXPECT_EQ(d[0].verdict, DimensionVerdict::kConditional);
  EXPECT_EQ(d[0].divisor.class_notes().front(), kNontrivialENote);
}

TEST(SearchDivisorsTest, SignalsMissingRealization) {
  EXPECT_NO_THROW(SearchDivisors(WeightedType(1, 1, 1, 6)));
  // alpha deg D = 7/4 < 2g - 2 = 2.
  EXPECT_THROW(SearchDivisors(WeightedType(1, 1, 4, 7)),
               NoGorensteinRealizationError);
  EXPECT_THROW(SearchDivisors(WeightedType(3, 4, 6, 12)),
               std::invalid_argument);
}

TEST(ClassifyTest, CountsPerAlpha) {
  // Independent of the published totals; see FletcherOracle below.
  const std::map<std::int64_t, std::size_t> want = {
      {1, 31}, {2, 21}, {3, 36}, {4, 33}, {5, 74}, {6, 20}};
  for (const auto& [alpha, count] : want) {
    EXPECT_EQ(Classified(alpha).size(), count) << "alpha=" << alpha;
  }
}

TEST(ClassifyTest, AgreesWithFletcherOracle) {
  for (std::int64_t alpha = 1; alpha <= 6; ++alpha) {
    std::set<WeightedType> oracle_types;
    for (std::int64_t a = 1; a * a < 168 * alpha; ++a) {
      for (std::int64_t b = a; a * b < 168 * alpha; ++b) {
        for (std::int64_t c = b; c <= a + b + alpha; ++c) {
          if (std::gcd(std::gcd(a, b), c) != 1) continue;
          WeightedType wt(a, b, c, a + b + c + alpha);
          if (oracle::QuasiSmooth(wt)) oracle_types.insert(wt);
        }
      }
    }
    std::set<WeightedType> ours;
    for (const auto& e : Classified(alpha)) ours.insert(e.type);
    EXPECT_EQ(ours, oracle_types) << "alpha=" << alpha;
  }
}

TEST(ClassifyTest, EntryInvariants) {
  for (std::int64_t alpha = 1; alpha <= 6; ++alpha) {
    const auto& entries = Classified(alpha);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const ClassificationEntry& e = entries[i];
      if (i > 0) {
        EXPECT_LT(entries[i - 1].type, e.type);
      }
      EXPECT_EQ(e.alpha, alpha);
      EXPECT_EQ(AInvariant(e.type), alpha);
      EXPECT_EQ(e.genus, Genus(e.type));
      EXPECT_EQ(e.geometric_genus, GeometricGenus(e.type));
      EXPECT_LT(e.type.a() * e.type.b(), 168 * alpha);
      ASSERT_FALSE(e.divisors.empty());
      EXPECT_EQ(e.divisors.size(), e.verdicts.size());
      EXPECT_TRUE(std::is_sorted(e.divisors.begin(), e.divisors.end()));
      EXPECT_EQ(e.branch_count, e.divisors.front().branch_count());
      for (const FractionalDivisor& d : e.divisors) {
        EXPECT_EQ(TotalDegree(d), DegreeOfD(e.type));
        EXPECT_TRUE(CheckGorenstein(d, alpha)) << e.type.ToString();
        EXPECT_TRUE(CheckDuality(d, alpha)) << e.type.ToString();
        EXPECT_TRUE(CheckShiftedFloorIdentities(d, alpha)) << e.type.ToString();
        EXPECT_TRUE(IsNegativeDefinite(IntersectionMatrix(BuildGraph(d))));
        EXPECT_TRUE(BuildGraph(d).IsMinimalGood());
      }
    }
  }
}

TEST(ClassifyTest, LowGeometricGenusWithFourBranchesNeedsSmallAlpha) {
  for (std::int64_t alpha = 1; alpha <= 6; ++alpha) {
    for (const auto& e : Classified(alpha)) {
      if (e.genus == 0 && e.branch_count == 4 && e.geometric_genus <= 1) {
        EXPECT_LE(alpha, 2) << e.type.ToString();
      }
    }
  }
}

TEST(ClassifyTest, WorkerCountDoesNotChangeOutput) {
  ClassifyOptions serial;
  serial.workers = 1;
  ClassifyOptions parallel;
  parallel.workers = 4;
  auto x = Classify(3, serial);
  auto y = Classify(3, parallel);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(x[i].type, y[i].type);
    EXPECT_EQ(x[i].divisors, y[i].divisors);
  }
}

TEST(ClassifyTest, TypeFilterRestrictsCandidates) {
  ClassifyOptions options;
  options.type_filter = [](const WeightedType& wt) { return wt.a() == 1; };
  for (const auto& e : Classify(2, options)) EXPECT_EQ(e.type.a(), 1);
}

TEST(NonpositiveTest, AlphaZero) {
  NonpositiveClassification c = ClassifyNonpositive(0);
  ASSERT_EQ(c.entries.size(), 3u);
  std::set<Rational> degrees;
  for (const FixedEntry& e : c.entries) {
    EXPECT_EQ(AInvariant(e.type), 0);
    EXPECT_EQ(e.divisor.genus(), 1);
    EXPECT_EQ(TotalDegree(e.divisor), DegreeOfD(e.type));
    EXPECT_TRUE(CheckGorenstein(e.divisor, 0));
    degrees.insert(DegreeOfD(e.type));
  }
  EXPECT_EQ(degrees, (std::set<Rational>{1, 2, 3}));
  EXPECT_TRUE(c.families.empty());
}

TEST(NonpositiveTest, AlphaMinusOne) {
  NonpositiveClassification c = ClassifyNonpositive(-1);
  ASSERT_EQ(c.entries.size(), 3u);
  EXPECT_EQ(c.entries[0].type, WeightedType(3, 4, 6, 12));
  EXPECT_EQ(c.entries[1].type, WeightedType(4, 6, 9, 18));
  EXPECT_EQ(c.entries[2].type, WeightedType(6, 10, 15, 30));
  ASSERT_EQ(c.families.size(), 1u);
  for (const FixedEntry& e : c.entries) {
    EXPECT_EQ(AInvariant(e.type), -1);
    EXPECT_EQ(TotalDegree(e.divisor), DegreeOfD(e.type));
    EXPECT_TRUE(CheckGorenstein(e.divisor, -1)) << e.name;
  }
  for (std::int64_t n = 2; n <= 20; ++n) {
    FixedEntry e = DSeriesMember(n);
    EXPECT_EQ(AInvariant(e.type), -1);
    EXPECT_EQ(TotalDegree(e.divisor), DegreeOfD(e.type));
    EXPECT_TRUE(CheckGorenstein(e.divisor, -1)) << e.name;
  }
  EXPECT_THROW(DSeriesMember(1), std::invalid_argument);
}

TEST(NonpositiveTest, MoreNegative) {
  NonpositiveClassification c = ClassifyNonpositive(-3);
  EXPECT_TRUE(c.entries.empty());
  ASSERT_EQ(c.families.size(), 1u);
  EXPECT_NE(c.families[0].description.find("uv - w^n"), std::string::npos);
  EXPECT_FALSE(c.families[0].caveat.empty());
  EXPECT_THROW(ClassifyNonpositive(1), std::invalid_argument);
}

TEST(NeighborNonvanishingTest, AllEntries) {
  for (std::int64_t alpha = 1; alpha <= 6; ++alpha) {
    PropertyReport r = CheckNeighborNonvanishing(Classified(alpha));
    EXPECT_TRUE(r.ok()) << "alpha=" << alpha;
  }
  EXPECT_EQ(HilbertCoefficients(WeightedType(8, 9, 12, 36), 8)[8], 1);
}

TEST(CanonicalRelationNotesTest, Format) {
  EXPECT_EQ(CanonicalRelationNotes(FractionalDivisor(5, 1, {{1, 2}, {1, 3}}), 5),
            std::vector<std::string>{"5E + 2P_1 + P_2 ~ K_X"});
  EXPECT_TRUE(CanonicalRelationNotes(
                  FractionalDivisor(0, -1, {{1, 2}, {1, 2}, {1, 2}}), 1)
                  .empty());
}

}  // namespace
}  // namespace whsl
