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

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace rcmbfs {

/// Bijective relabeling. new_to_old()[new] = old, old_to_new()[old] = new.
class Permutation
{
public:
  Permutation() = default;

  [[nodiscard]] static Permutation identity(vertex_t n);

  /// Throws ParameterError if the array is not a bijection on [0, size).
  [[nodiscard]] static Permutation from_new_to_old(std::vector<vertex_t> new_to_old);

  [[nodiscard]] vertex_t size() const noexcept { return static_cast<vertex_t>(new_to_old_.size()); }
  [[nodiscard]] std::span<const vertex_t> new_to_old() const noexcept { return new_to_old_; }
  [[nodiscard]] std::span<const vertex_t> old_to_new() const noexcept { return old_to_new_; }
  [[nodiscard]] vertex_t old_id(vertex_t new_id) const noexcept { return new_to_old_[new_id]; }
  [[nodiscard]] vertex_t new_id(vertex_t old_id) const noexcept { return old_to_new_[old_id]; }

  [[nodiscard]] Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<vertex_t> new_to_old_;
  std::vector<vertex_t> old_to_new_;
};

struct RcmRunStats
{
  /// One range per component explored by the traversal, in new ids,
  /// ascending. For full RCM they tile [0, n_non_isolated); a partial run
  /// only tiles [0, relabeled) and its last range may be a cut component.
  std::vector<VertexRange> component_ranges;
  vertex_t n_non_isolated = 0;
  /// Vertices placed by the traversal (ceil(p * |V+|) for partial runs).
  vertex_t relabeled = 0;
  /// Largest explored range over n_non_isolated.
  double largest_component_fraction = 0.0;
};

struct RcmResult
{
  Permutation permutation;
  RcmRunStats stats;
};

/**
 * Reverse Cuthill-McKee ordering.
 *
 * Non-isolated vertices are visited component by component, each component
 * starting from its unvisited vertex of minimal degree and expanding
 * neighbors in ascending degree order. The visit order is reversed and
 * isolated vertices are appended. Degree ties resolve by ascending id.
 */
[[nodiscard]] RcmResult rcm(const CsrGraph& g);

/// RCM that stops after ceil(ratio * |V+|) vertices are placed. The
/// reversed prefix is followed by the remaining non-isolated vertices in
/// ascending original id, then isolated vertices. ratio must be in (0, 1].
[[nodiscard]] RcmResult partial_rcm(const CsrGraph& g, double ratio);

/// Relabels g: edge (u, v) becomes (new_id(u), new_id(v)). Adjacency lists
/// come out sorted ascending.
[[nodiscard]] CsrGraph apply_permutation(const CsrGraph& g, const Permutation& perm);

[[nodiscard]] EdgeList relabel_edges(const EdgeList& list, const Permutation& perm);

enum class AdjacencyOrder
{
  ascending_degree,
  descending_degree,
};

/// Same topology, each list reordered by neighbor degree (ties by id).
[[nodiscard]] CsrGraph degree_sort_adjacency(const CsrGraph& g, AdjacencyOrder order);

inline constexpr std::string_view kRcmAlgorithmVersion = "rcm-mindegree-start/1";

void write_permutation(const std::filesystem::path& path, const Permutation& perm, const Metadata& meta);
[[nodiscard]] Permutation read_permutation(const std::filesystem::path& path);

} // namespace rcmbfs
