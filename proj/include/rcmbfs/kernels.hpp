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

#include "rcmbfs/bitmap.hpp"
#include "rcmbfs/csr_graph.hpp"
#include "rcmbfs/partition.hpp"

#include <cstdint>
#include <span>
#include <vector>

// Single-level traversal kernels. Every kernel takes the visited bitmap and
// predecessor array of the traversal in progress, expands one level, and
// reports what it did. All frontier vertices must already be visited.

namespace rcmbfs {

struct StepCounters
{
  std::uint64_t scanned_edges = 0;
  std::uint64_t discovered = 0;
  /// Degree sum of the discovered vertices (m_f of the next frontier).
  std::uint64_t discovered_degree_sum = 0;
  std::uint64_t first_pass_found = 0;
  std::uint64_t partition_total = 0;
  /// Adjacency entries assigned to each thread (striped top-down only).
  std::vector<std::uint64_t> thread_edges;
};

/// Level-synchronous top-down step, static split of the frontier over threads.
/// Claims unvisited neighbors with an atomic test-and-set; `next` is overwritten.
StepCounters top_down_step(const CsrGraph& g, std::span<const vertex_t> frontier, Bitmap& visited,
                           std::span<pred_t> pred, std::vector<vertex_t>& next, unsigned threads);

/**
 * Top-down step with per-vertex neighbor striping.
 *
 * For frontier vertex j with degree d, thread i scans the stripe
 * [row_starts[v] + i*floor(d/t), +floor(d/t)) and thread (j mod t) also
 * takes the d mod t trailing neighbors. High-degree hubs are thereby spread
 * over all threads.
 */
StepCounters top_down_step_balanced(const CsrGraph& g, std::span<const vertex_t> frontier, Bitmap& visited,
                                    std::span<pred_t> pred, std::vector<vertex_t>& next, unsigned threads);

/// Bottom-up step over all vertices with a static block split.
StepCounters bottom_up_step(const CsrGraph& g, const Bitmap& frontier, Bitmap& visited, std::span<pred_t> pred,
                            Bitmap& next, unsigned threads);

/// Bottom-up step where threads steal whole partitions from `parts`. No
/// atomics on visited or next: each claimed partition is block aligned and
/// owned by one thread.
StepCounters bottom_up_step_balanced(const CsrGraph& g, const Bitmap& frontier, Bitmap& visited,
                                     std::span<pred_t> pred, Bitmap& next, PartitionSet& parts, unsigned threads);

/**
 * Work-stealing bottom-up step with workload reduction.
 *
 * `g_desc` must list each adjacency in descending neighbor degree. Every
 * claimed partition is shrunk, then pass one tests only the first (highest
 * degree) neighbor of each unvisited vertex, visited is merged from next
 * with a block-wide OR, the partition is shrunk again and pass two scans
 * the remaining neighbors with early exit.
 */
StepCounters bottom_up_step_reduced(const CsrGraph& g_desc, const Bitmap& frontier, Bitmap& visited,
                                    std::span<pred_t> pred, Bitmap& next, PartitionSet& parts, unsigned threads);

} // namespace rcmbfs
