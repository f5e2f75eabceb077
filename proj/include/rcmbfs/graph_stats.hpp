/*
Copyright (c) 2026 The rcmbfs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "rcmbfs/csr_graph.hpp"

#include <cstdint>
#include <vector>

namespace rcmbfs {

struct ComponentSummary
{
  /// Component id per vertex; isolated vertices get their own component.
  std::vector<vertex_t> label;
  /// Sizes of components with at least one edge, largest first.
  std::vector<vertex_t> sizes;
  vertex_t isolated = 0;
};

[[nodiscard]] ComponentSummary connected_components(const CsrGraph& g);

/// Vertices with no incident non-loop edge in the raw list.
[[nodiscard]] vertex_t count_isolated(const EdgeList& list);
[[nodiscard]] vertex_t count_isolated(const CsrGraph& g);

struct DegreeProfile
{
  vertex_t min = 0;
  vertex_t p50 = 0;
  vertex_t p90 = 0;
  vertex_t p99 = 0;
  vertex_t max = 0;
  double mean = 0.0;
};

/// Percentiles over non-isolated vertices (nearest-rank).
[[nodiscard]] DegreeProfile degree_profile(const CsrGraph& g);

} // namespace rcmbfs
