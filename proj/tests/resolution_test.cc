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

#include "whsl/resolution.h"

#include "gtest/gtest.h"
#include "oracles.h"
#include "whsl/paper_cases.h"

namespace whsl {
namespace {

using Arms = std::vector<std::vector<std::int64_t>>;

IntegerMatrix Matrix(std::initializer_list<std::initializer_list<int>> rows) {
  IntegerMatrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return m;
}

TEST(BuildGraphTest, Examples) {
  ResolutionGraph a = BuildGraph(FractionalDivisor(3, 4, {}));
  EXPECT_EQ(a.central_genus, 3);
  EXPECT_EQ(a.central_self_intersection, -4);
  EXPECT_TRUE(a.arms.empty());

  ResolutionGraph b =
      BuildGraph(FractionalDivisor(0, -2, {{1, 2}, {2, 3}, {6, 7}}));
  EXPECT_EQ(b.central_self_intersection, -1);
  EXPECT_EQ(b.arms, (Arms{{-2}, {-3}, {-7}}));

  ResolutionGraph c = BuildGraph(FractionalDivisor(1, 0, {{2, 5}}));
  EXPECT_EQ(c.arms, (Arms{{-2, -3}}));

  ResolutionGraph d =
      BuildGraph(FractionalDivisor(0, -1, {{2, 3}, {1, 4}, {1, 8}}));
  EXPECT_EQ(d.central_self_intersection, -2);
  EXPECT_EQ(d.arms, (Arms{{-3}, {-2, -2, -2}, {-2, -2, -2, -2, -2, -2, -2}}));
}

TEST(IntersectionMatrixTest, Examples) {
  ResolutionGraph single{3, -4, {}};
  EXPECT_EQ(IntersectionMatrix(single), Matrix({{-4}}));
  ResolutionGraph one_arm{0, -1, {{-2, -3}}};
  EXPECT_EQ(IntersectionMatrix(one_arm),
            Matrix({{-1, 1, 0}, {1, -2, 1}, {0, 1, -3}}));
  ResolutionGraph star =
      BuildGraph(FractionalDivisor(0, -2, {{1, 2}, {2, 3}, {6, 7}}));
  EXPECT_EQ(IntersectionMatrix(star), Matrix({{-1, 1, 1, 1},
                                              {1, -2, 0, 0},
                                              {1, 0, -3, 0},
                                              {1, 0, 0, -7}}));
}

TEST(NegativeDefiniteTest, Examples) {
  EXPECT_TRUE(IsNegativeDefinite(Matrix({{-2, 1}, {1, -3}})));
  EXPECT_TRUE(IsNegativeDefinite(Matrix({{-1}})));
  EXPECT_FALSE(IsNegativeDefinite(Matrix({{0}})));
  EXPECT_FALSE(IsNegativeDefinite(Matrix({{-1, 1}, {1, -1}})));
  EXPECT_FALSE(IsNegativeDefinite(Matrix({{-2, 1}, {0, -2}})));
  EXPECT_EQ(LeadingPrincipalMinors(Matrix({{-2, 1}, {1, -3}})),
            (std::vector<Integer>{-2, 5}));
}

TEST(NegativeDefiniteTest, BareissMatchesRationalElimination) {
  for (const PaperCase& c : PaperCases()) {
    IntegerMatrix m = IntersectionMatrix(BuildGraph(c.divisor));
    std::vector<Integer> fast = LeadingPrincipalMinors(m);
    std::vector<Rational> slow = oracle::RationalLeadingMinors(m);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) {
      ASSERT_EQ(Rational(fast[k]), slow[k]) << c.case_id << " k=" << k;
    }
  }
}

TEST(GraphPropertiesTest, EveryFixture) {
  for (const PaperCase& c : PaperCases()) {
    ResolutionGraph g = BuildGraph(c.divisor);
    IntegerMatrix m = IntersectionMatrix(g);
    EXPECT_TRUE(IsNegativeDefinite(m)) << c.case_id;
    EXPECT_TRUE(g.IsMinimalGood()) << c.case_id;
    EXPECT_EQ(m.size(), g.VertexCount());
    Integer det = LeadingPrincipalMinors(m).back();
    EXPECT_EQ(det > 0, m.size() % 2 == 0) << c.case_id;
    ASSERT_EQ(g.arms.size(), c.divisor.branches().size());
    for (std::size_t i = 0; i < g.arms.size(); ++i) {
      std::vector<std::int64_t> b;
      for (std::int64_t w : g.arms[i]) b.push_back(-w);
      const Branch& br = c.divisor.branches()[i];
      EXPECT_EQ(EvaluateContinuedFraction(b), Rational(br.q, br.q - br.p));
    }
  }
}

TEST(ToDotTest, Rendering) {
  ResolutionGraph single = BuildGraph(FractionalDivisor(3, 4, {}));
  EXPECT_EQ(ToDot(single),
            "graph resolution {\n  v0 [label=\"g=3, -4\"];\n}\n");
  ResolutionGraph star =
      BuildGraph(FractionalDivisor(0, -2, {{1, 2}, {2, 3}, {6, 7}}));
  std::string dot = ToDot(star);
  EXPECT_EQ(dot, ToDot(star));
  std::size_t nodes = 0, edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  EXPECT_EQ(nodes, 4u);
  EXPECT_EQ(edges, 3u);
}

TEST(GraphJsonTest, Shape) {
  nlohmann::json j = BuildGraph(FractionalDivisor(1, 0, {{2, 5}}));
  EXPECT_EQ(j.dump(), R"({"arms":[[-2,-3]],"centralSelfInt":-1,"genus":1})");
}

}  // namespace
}  // namespace whsl
