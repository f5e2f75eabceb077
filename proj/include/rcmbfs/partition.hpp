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
#include "rcmbfs/types.hpp"

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

namespace rcmbfs {

/**
 * Work-stealing partitions for bottom-up steps.
 *
 * Ranges are aligned to 512-vertex blocks (only the last one may end at n),
 * tile [0, n), and hold non-increasing block counts. Threads claim the next
 * unprocessed partition through a shared cursor. live_bounds() are the
 * shrinkable sub-ranges still worth scanning; they persist across the steps
 * of one traversal.
 */
class PartitionSet
{
public:
  PartitionSet() = default;
  PartitionSet(std::vector<VertexRange> partitions, vertex_t n);

  PartitionSet(const PartitionSet& other);
  PartitionSet& operator=(const PartitionSet& other);

  [[nodiscard]] std::size_t size() const noexcept { return parts_.size(); }
  [[nodiscard]] vertex_t n() const noexcept { return n_; }
  [[nodiscard]] std::span<const VertexRange> partitions() const noexcept { return parts_; }
  [[nodiscard]] std::span<const VertexRange> live_bounds() const noexcept { return live_; }
  [[nodiscard]] VertexRange& live_bound(std::size_t i) noexcept { return live_[i]; }

  /// Index of the claimed partition, or >= size() once all are taken.
  [[nodiscard]] std::size_t claim() noexcept { return cursor_.fetch_add(1, std::memory_order_relaxed); }
  [[nodiscard]] std::size_t cursor() const noexcept { return cursor_.load(std::memory_order_relaxed); }
  void reset_cursor() noexcept { cursor_.store(0, std::memory_order_relaxed); }

  /// Restores every live bound to its full partition.
  void reset_bounds();

  [[nodiscard]] std::uint64_t live_total() const noexcept;

private:
  vertex_t n_ = 0;
  std::vector<VertexRange> parts_;
  std::vector<VertexRange> live_;
  std::atomic<std::size_t> cursor_{0};
};

/// Block counts b_0 >= b_1 >= ... >= 1 summing to total_blocks, following a
/// descending arithmetic sequence that starts near twice the average and ends
/// at one block. Rounding slack is spread over the leading partitions.
[[nodiscard]] std::vector<std::uint64_t> descending_block_counts(std::uint64_t total_blocks, std::uint64_t parts);

/// lambda * threads partitions over [0, n). When that exceeds the number of
/// 512-vertex blocks the count is clamped to the block count and a warning
/// is printed unless `warn` is false.
[[nodiscard]] PartitionSet get_partitions(vertex_t n, unsigned lambda, unsigned threads, bool warn = true);

/// Drops leading and trailing fully-visited blocks from a live bound. The
/// result is always a sub-range of the input; an all-visited range comes
/// back empty.
[[nodiscard]] VertexRange shrink_partition(VertexRange live, const Bitmap& visited) noexcept;

} // namespace rcmbfs
