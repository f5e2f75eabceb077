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

#include "rcmbfs/partition.hpp"

#include <algorithm>
#include <cstdio>
#include <fmt/format.h>

namespace rcmbfs {

PartitionSet::PartitionSet(std::vector<VertexRange> partitions, vertex_t n)
  : n_(n)
  , parts_(std::move(partitions))
  , live_(parts_)
{
}

PartitionSet::PartitionSet(const PartitionSet& other)
  : n_(other.n_)
  , parts_(other.parts_)
  , live_(other.live_)
  , cursor_(other.cursor())
{
}

PartitionSet& PartitionSet::operator=(const PartitionSet& other)
{
  n_ = other.n_;
  parts_ = other.parts_;
  live_ = other.live_;
  cursor_.store(other.cursor(), std::memory_order_relaxed);
  return *this;
}

void PartitionSet::reset_bounds()
{
  live_ = parts_;
}

std::uint64_t PartitionSet::live_total() const noexcept
{
  std::uint64_t total = 0;
  for (const auto& r : live_)
    total += r.size();
  return total;
}

std::vector<std::uint64_t> descending_block_counts(std::uint64_t total_blocks, std::uint64_t parts)
{
  if (parts == 0 || parts > total_blocks)
    throw ParameterError(fmt::format("cannot split {} blocks into {} partitions", total_blocks, parts));
  if (parts == 1)
    return {total_blocks};

  // Real-valued terms b_i = (2B/S - 1) - i * (2B/S - 2)/(S - 1), so b_{S-1} = 1
  // and the terms sum to B. Scaled by S(S-1) everything stays integral.
  const std::uint64_t s = parts;
  const std::uint64_t b = total_blocks;
  const std::uint64_t denom = s * (s - 1);
  const std::uint64_t top = (2 * b - s) * (s - 1);
  const std::uint64_t step = 2 * b - 2 * s;

  std::vector<std::uint64_t> counts(s);
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < s; ++i) {
    counts[i] = (top - i * step) / denom;
    sum += counts[i];
  }
  // floors lose < 1 per term, so 0 <= slack < S
  const std::uint64_t slack = b - sum;
  for (std::uint64_t i = 0; i < slack; ++i)
    ++counts[i];
  return counts;
}

PartitionSet get_partitions(vertex_t n, unsigned lambda, unsigned threads, bool warn)
{
  if (lambda < 1 || threads < 1)
    throw ParameterError("lambda and threads must be >= 1");
  const std::uint64_t blocks = (std::uint64_t{n} + Bitmap::kBlockBits - 1) / Bitmap::kBlockBits;
  std::uint64_t parts = std::uint64_t{lambda} * threads;
  if (blocks == 0)
    return PartitionSet({VertexRange{0, 0}}, n);
  if (parts > blocks) {
    if (warn)
      fmt::print(stderr, "warning: {} partitions requested but the graph has only {} blocks; using {}\n", parts,
                 blocks, blocks);
    parts = blocks;
  }
  const auto counts = descending_block_counts(blocks, parts);
  std::vector<VertexRange> ranges;
  ranges.reserve(parts);
  std::uint64_t block = 0;
  for (const auto c : counts) {
    const auto begin = block * Bitmap::kBlockBits;
    block += c;
    const auto end = std::min<std::uint64_t>(block * Bitmap::kBlockBits, n);
    ranges.push_back({static_cast<vertex_t>(begin), static_cast<vertex_t>(end)});
  }
  return PartitionSet(std::move(ranges), n);
}

VertexRange shrink_partition(VertexRange live, const Bitmap& visited) noexcept
{
  constexpr vertex_t block = Bitmap::kBlockBits;
  while (!live.empty()) {
    const vertex_t block_end = std::min<vertex_t>(live.end, (live.begin / block + 1) * block);
    if (!visited.all_set(live.begin, block_end))
      break;
    live.begin = block_end;
  }
  while (!live.empty()) {
    const vertex_t block_begin = std::max<vertex_t>(live.begin, (live.end - 1) / block * block);
    if (!visited.all_set(block_begin, live.end))
      break;
    live.end = block_begin;
  }
  if (live.empty())
    live.end = live.begin;
  return live;
}

} // namespace rcmbfs
