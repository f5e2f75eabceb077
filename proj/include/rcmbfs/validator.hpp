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
#include "rcmbfs/edge_io.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rcmbfs {

enum class ValidationRule : std::uint8_t
{
  root_is_own_parent,   ///< pred[s] == s
  tree_edges_exist,     ///< (v, pred[v]) is a graph edge
  levels_consistent,    ///< pred chains reach s without cycles
  edge_level_span,      ///< |level(u) - level(v)| <= 1 on every edge
  reachability,         ///< reached iff in the component of s
};

inline constexpr std::size_t kValidationRuleCount = 5;

[[nodiscard]] std::string_view to_string(ValidationRule rule) noexcept;

struct RuleResult
{
  ValidationRule rule = ValidationRule::root_is_own_parent;
  bool passed = true;
  /// First offending vertex or edge, empty when passed.
  std::string counterexample;
};

struct ValidationReport
{
  bool passed = true;
  std::array<RuleResult, kValidationRuleCount> checks{};
  /// Level of each vertex from its pred chain; -1 when unreached or undefined.
  std::vector<std::int64_t> derived_levels;

  [[nodiscard]] const RuleResult& check(ValidationRule rule) const noexcept
  {
    return checks[static_cast<std::size_t>(rule)];
  }
  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] Metadata to_key_values() const;
};

/**
 * Graph500-style BFS tree check.
 *
 * Works only from the graph, the edge list and the predecessor array.
 * Component membership for the reachability rule comes from a union-find
 * over `edges`, independent of the CSR adjacency. Edges must be in g's id
 * space. Throws ParameterError when pred.size() != g.n() or s is out of range.
 */
[[nodiscard]] ValidationReport validate(const CsrGraph& g, std::span<const Edge> edges, vertex_t source,
                                        std::span<const pred_t> pred);

/// Same, with the edge set taken from g itself.
[[nodiscard]] ValidationReport validate(const CsrGraph& g, vertex_t source, std::span<const pred_t> pred);

/// Depth of every vertex along its predecessor chain, -1 for unreached
/// vertices and for chains that cycle or leave the reached set.
[[nodiscard]] std::vector<std::int64_t> levels_from_predecessors(std::span<const pred_t> pred, vertex_t source);

} // namespace rcmbfs
