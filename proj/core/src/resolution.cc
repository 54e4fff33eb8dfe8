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

#include <sstream>
#include <stdexcept>

namespace whsl {

std::size_t ResolutionGraph::VertexCount() const {
  std::size_t n = 1;
  for (const auto& arm : arms) n += arm.size();
  return n;
}

bool ResolutionGraph::IsMinimalGood() const {
  if (central_self_intersection == -1 && central_genus == 0 &&
      arms.size() <= 2) {
    return false;
  }
  for (const auto& arm : arms) {
    for (std::int64_t w : arm) {
      if (w == -1) return false;
    }
  }
  return true;
}

ResolutionGraph BuildGraph(const FractionalDivisor& d) {
  ResolutionGraph graph;
  graph.central_genus = d.genus();
  graph.central_self_intersection = -(d.deg_e() + d.branch_count());
  for (const Branch& br : d.branches()) {
    std::vector<std::int64_t> arm;
    for (std::int64_t b : HirzebruchJungExpansion(br.q, br.p)) {
      arm.push_back(-b);
    }
    graph.arms.push_back(std::move(arm));
  }
  return graph;
}

IntegerMatrix IntersectionMatrix(const ResolutionGraph& graph) {
  const std::size_t n = graph.VertexCount();
  IntegerMatrix m(n, std::vector<Integer>(n, Integer(0)));
  m[0][0] = graph.central_self_intersection;
  std::size_t next = 1;
  for (const auto& arm : graph.arms) {
    std::size_t prev = 0;
    for (std::int64_t w : arm) {
      m[next][next] = w;
      m[prev][next] = 1;
      m[next][prev] = 1;
      prev = next;
      ++next;
    }
  }
  return m;
}

std::vector<Integer> LeadingPrincipalMinors(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  }
  IntegerMatrix a = m;
  std::vector<Integer> minors;
  minors.reserve(n);
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // After step k-1 the pivot a[k][k] equals the leading (k+1)x(k+1) minor.
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) {
      // Later minors are not defined by this elimination; report zeros.
      minors.resize(n, Integer(0));
      return minors;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev_pivot;
      }
    }
    prev_pivot = a[k][k];
  }
  return minors;
}

bool IsNegativeDefinite(const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i].size() != m.size() || m[i][j] != m[j][i]) return false;
    }
  }
  const std::vector<Integer> minors = LeadingPrincipalMinors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    bool odd = (k + 1) % 2 == 1;
    if (odd ? minors[k] >= 0 : minors[k] <= 0) return false;
  }
  return true;
}

std::string ToDot(const ResolutionGraph& graph) {
  std::ostringstream out;
  out << "graph resolution {\n";
  out << "  v0 [label=\"g=" << graph.central_genus << ", "
      << graph.central_self_intersection << "\"];\n";
  std::size_t next = 1;
  std::ostringstream edges;
  for (const auto& arm : graph.arms) {
    std::size_t prev = 0;
    for (std::int64_t w : arm) {
      out << "  v" << next << " [label=\"" << w << "\"];\n";
      edges << "  v" << prev << " -- v" << next << ";\n";
      prev = next;
      ++next;
    }
  }
  out << edges.str() << "}\n";
  return out.str();
}

void to_json(nlohmann::json& j, const ResolutionGraph& graph) {
  j = nlohmann::json{{"genus", graph.central_genus},
                     {"centralSelfInt", graph.central_self_intersection},
                     {"arms", graph.arms}};
}

}  // namespace whsl
