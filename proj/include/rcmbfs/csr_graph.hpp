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

#include "rcmbfs/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rcmbfs {

/// Raw edge list as produced by a generator or read from disk. May hold
/// self-loops and duplicates; every endpoint must be < n_declared.
struct EdgeList
{
  vertex_t n_declared = 0;
  std::vector<Edge> edges;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

/**
 * Undirected graph in compressed sparse row form.
 *
 * Each undirected edge is stored in both directions. The neighbors of v are
 * dst[row_starts[v] .. row_starts[v+1]). Immutable after construction and
 * safe to share between threads.
 */
class CsrGraph
{
public:
  CsrGraph() = default;

  /// Adopts prebuilt arrays. Checks offset monotonicity and neighbor range,
  /// not symmetry (see check_invariants).
  CsrGraph(std::vector<edge_index_t> row_starts, std::vector<vertex_t> dst);

  [[nodiscard]] vertex_t n() const noexcept { return n_; }
  [[nodiscard]] edge_index_t m_directed() const noexcept { return dst_.size(); }
  [[nodiscard]] edge_index_t m_undirected() const noexcept { return dst_.size() / 2; }

  [[nodiscard]] std::span<const edge_index_t> row_starts() const noexcept { return row_starts_; }
  [[nodiscard]] std::span<const vertex_t> dst() const noexcept { return dst_; }
  [[nodiscard]] std::span<const vertex_t> degrees() const noexcept { return degrees_; }

  [[nodiscard]] vertex_t degree(vertex_t v) const noexcept { return degrees_[v]; }

  /// Checked neighbor view; throws std::out_of_range for v >= n.
  [[nodiscard]] std::span<const vertex_t> neighbors(vertex_t v) const;

  /// Unchecked neighbor view for hot loops.
  [[nodiscard]] std::span<const vertex_t> adj(vertex_t v) const noexcept
  {
    return {dst_.data() + row_starts_[v], dst_.data() + row_starts_[v + 1]};
  }

  friend bool operator==(const CsrGraph&, const CsrGraph&) = default;

private:
  vertex_t n_ = 0;
  std::vector<edge_index_t> row_starts_{0};
  std::vector<vertex_t> dst_;
  std::vector<vertex_t> degrees_;
};

/// Symmetrizes, drops self-loops and duplicates, and sorts every adjacency
/// list ascending. Throws GraphError naming the first bad edge index.
[[nodiscard]] CsrGraph build_csr(const EdgeList& edges);

/// max{ i - j : (i, j) stored, i > j }, 0 for edgeless graphs.
[[nodiscard]] std::uint64_t bandwidth(const CsrGraph& g);

/// Full structural check (symmetry, no loops, no duplicates). Returns a
/// description of the first violation found.
[[nodiscard]] std::optional<std::string> check_invariants(const CsrGraph& g);

/// FNV-1a over n, offsets and neighbor arrays.
[[nodiscard]] std::uint64_t graph_fingerprint(const CsrGraph& g);

/// Canonical undirected edge list (u < v, each edge once) in g's id space.
[[nodiscard]] EdgeList to_edge_list(const CsrGraph& g);

} // namespace rcmbfs
