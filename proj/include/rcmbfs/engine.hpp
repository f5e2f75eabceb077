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

#include "rcmbfs/bfs_types.hpp"
#include "rcmbfs/bitmap.hpp"
#include "rcmbfs/csr_graph.hpp"
#include "rcmbfs/frontier.hpp"
#include "rcmbfs/partition.hpp"

#include <iosfwd>
#include <span>

namespace rcmbfs {

struct PolicyCounters
{
  std::uint64_t frontier_edges = 0;   ///< m_f
  std::uint64_t unexplored_edges = 0; ///< m_u
  std::uint64_t frontier_size = 0;    ///< n_f
  std::uint64_t n = 0;
};

/// Direction-optimizing switch: top-down goes bottom-up once
/// m_f > m_u / alpha, bottom-up returns to top-down once n_f < n / beta.
/// Otherwise the current direction is kept.
[[nodiscard]] Direction update_traversal_policy(Direction current, const PolicyCounters& c,
                                                const BfsParams& params) noexcept;

/// Queue-based BFS; parents are the first discoverer in ascending scan order.
[[nodiscard]] BfsResult bfs_sequential(const CsrGraph& g, vertex_t source);

/**
 * Level-synchronous / hybrid traversal driver.
 *
 * Holds the per-traversal buffers (visited, two frontiers, partitions) so
 * repeated runs on one graph do not reallocate. Not reentrant. The
 * hybrid_reduced mode needs the descending-degree adjacency variant of the
 * same graph.
 */
class BfsEngine
{
public:
  BfsEngine(const CsrGraph& g, const BfsParams& params, const CsrGraph* descending = nullptr);

  BfsEngine(const BfsEngine&) = delete;
  BfsEngine& operator=(const BfsEngine&) = delete;

  [[nodiscard]] BfsResult run(vertex_t source);

  [[nodiscard]] const BfsParams& params() const noexcept { return params_; }
  [[nodiscard]] const PartitionSet& partitions() const noexcept { return parts_; }

private:
  const CsrGraph& g_;
  const CsrGraph* desc_;
  BfsParams params_;
  Bitmap visited_;
  Bitmap isolated_;
  Frontier cur_;
  Frontier next_;
  PartitionSet parts_;
};

/// One-shot convenience wrapper; dispatches `sequential` to bfs_sequential.
[[nodiscard]] BfsResult bfs_run(const CsrGraph& g, const CsrGraph* descending, vertex_t source,
                                const BfsParams& params);

/// Per-level counter trace, one CSV row per level.
void write_trace_header(std::ostream& out);
void write_trace_rows(std::ostream& out, unsigned round, vertex_t source, std::span<const LevelRecord> levels);

} // namespace rcmbfs
