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

#ifndef WHSL_RESOLUTION_H_
#define WHSL_RESOLUTION_H_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "whsl/arith.h"
#include "whsl/dpd.h"

namespace whsl {

// Star-shaped dual graph: a central curve of genus g with one chain of
// rational curves per branch point.
struct ResolutionGraph {
  std::int64_t central_genus = 0;
  std::int64_t central_self_intersection = 0;
  // Self-intersections -b_j, listed from the central curve outward.
  std::vector<std::vector<std::int64_t>> arms;

  friend bool operator==(const ResolutionGraph&,
                         const ResolutionGraph&) = default;

  std::size_t VertexCount() const;
  // No genus 0 curve of self-intersection -1 meeting at most two others.
  bool IsMinimalGood() const;
};

using IntegerMatrix = std::vector<std::vector<Integer>>;

ResolutionGraph BuildGraph(const FractionalDivisor& d);

// Central vertex first, then each arm from the center outward.
IntegerMatrix IntersectionMatrix(const ResolutionGraph& graph);

// Exact fraction-free elimination; true iff (-1)^k M_k > 0 for every
// leading principal minor M_k.
bool IsNegativeDefinite(const IntegerMatrix& m);

// Leading principal minors M_1, ..., M_n (Bareiss pivots).
std::vector<Integer> LeadingPrincipalMinors(const IntegerMatrix& m);

std::string ToDot(const ResolutionGraph& graph);

// {genus, centralSelfInt, arms: [[-b, ...], ...]}.
void to_json(nlohmann::json& j, const ResolutionGraph& graph);

}  // namespace whsl

#endif  // WHSL_RESOLUTION_H_
