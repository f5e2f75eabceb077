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

#include "rcmbfs/kernels.hpp"

#include <bit>
#include <cstring>
#include <omp.h>

namespace rcmbfs {

namespace {

/// Calls fn(v) for every v in r whose bit is clear, one word at a time.
template<typename Fn>
inline void for_each_unset(const Bitmap& bits, VertexRange r, Fn&& fn)
{
  if (r.empty())
    return;
  const std::uint64_t* words = bits.data();
  const std::size_t w_first = r.begin / Bitmap::kWordBits;
  const std::size_t w_last = (r.end - 1) / Bitmap::kWordBits;
  for (std::size_t w = w_first; w <= w_last; ++w) {
    std::uint64_t todo = ~words[w];
    if (w == w_first)
      todo &= ~std::uint64_t{0} << (r.begin % Bitmap::kWordBits);
    if (w == w_last && r.end % Bitmap::kWordBits != 0)
      todo &= (std::uint64_t{1} << (r.end % Bitmap::kWordBits)) - 1;
    while (todo != 0) {
      fn(static_cast<vertex_t>(w * Bitmap::kWordBits + static_cast<std::size_t>(std::countr_zero(todo))));
      todo &= todo - 1;
    }
  }
}

struct LocalCounts
{
  std::uint64_t scanned = 0;
  std::uint64_t found = 0;
  std::uint64_t degree_sum = 0;
  std::uint64_t first_pass = 0;
  std::uint64_t partition_total = 0;
};

void accumulate(StepCounters& c, const LocalCounts& l)
{
  c.scanned_edges += l.scanned;
  c.discovered += l.found;
  c.discovered_degree_sum += l.degree_sum;
  c.first_pass_found += l.first_pass;
  c.partition_total += l.partition_total;
}

/// Concatenates thread-local queues into `next` in thread order. Must be
/// called by every thread of the enclosing parallel region.
void gather_queues(std::vector<std::vector<vertex_t>>& local, std::vector<std::size_t>& offset,
                   std::vector<vertex_t>& next, std::size_t tid)
{
  offset[tid + 1] = local[tid].size();
#pragma omp barrier
#pragma omp single
  {
    for (std::size_t t = 0; t + 1 < offset.size(); ++t)
      offset[t + 1] += offset[t];
    next.resize(offset.back());
  }
  if (!local[tid].empty())
    std::memcpy(next.data() + offset[tid], local[tid].data(), local[tid].size() * sizeof(vertex_t));
}

inline vertex_t row_degree(const edge_index_t* rs, vertex_t v) noexcept
{
  return static_cast<vertex_t>(rs[v + 1] - rs[v]);
}

} // namespace

StepCounters top_down_step(const CsrGraph& g, std::span<const vertex_t> frontier, Bitmap& visited,
                           std::span<pred_t> pred, std::vector<vertex_t>& next, unsigned threads)
{
  const edge_index_t* rs = g.row_starts().data();
  const vertex_t* dst = g.dst().data();
  const auto count = static_cast<std::int64_t>(frontier.size());
  std::vector<std::vector<vertex_t>> local(threads);
  std::vector<std::size_t> offset(threads + 1, 0);
  StepCounters c;

#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    auto& out = local[tid];
    LocalCounts l;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const vertex_t v = frontier[static_cast<std::size_t>(i)];
      for (edge_index_t e = rs[v]; e < rs[v + 1]; ++e) {
        const vertex_t w = dst[e];
        ++l.scanned;
        if (!visited.test_atomic(w) && !visited.test_and_set(w)) {
          pred[w] = v;
          out.push_back(w);
          l.degree_sum += row_degree(rs, w);
        }
      }
    }
    l.found = out.size();
#pragma omp critical
    accumulate(c, l);
    gather_queues(local, offset, next, tid);
  }
  return c;
}

StepCounters top_down_step_balanced(const CsrGraph& g, std::span<const vertex_t> frontier, Bitmap& visited,
                                    std::span<pred_t> pred, std::vector<vertex_t>& next, unsigned threads)
{
  const edge_index_t* rs = g.row_starts().data();
  const vertex_t* dst = g.dst().data();
  std::vector<std::vector<vertex_t>> local(threads);
  std::vector<std::size_t> offset(threads + 1, 0);
  StepCounters c;
  c.thread_edges.assign(threads, 0);
  std::size_t team = threads;

#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto tt = static_cast<std::size_t>(omp_get_num_threads());
    auto& out = local[tid];
    LocalCounts l;
    std::uint64_t assigned = 0;
#pragma omp single nowait
    team = tt;

    auto scan = [&](vertex_t v, edge_index_t first, edge_index_t last) {
      assigned += last - first;
      for (edge_index_t e = first; e < last; ++e) {
        const vertex_t w = dst[e];
        ++l.scanned;
        if (!visited.test_atomic(w) && !visited.test_and_set(w)) {
          pred[w] = v;
          out.push_back(w);
          l.degree_sum += row_degree(rs, w);
        }
      }
    };

    for (std::size_t j = 0; j < frontier.size(); ++j) {
      const vertex_t v = frontier[j];
      const edge_index_t begin = rs[v];
      const edge_index_t workload = (rs[v + 1] - begin) / tt;
      const edge_index_t start = begin + tid * workload;
      scan(v, start, start + workload);
      if (j % tt == tid)
        scan(v, begin + tt * workload, rs[v + 1]);
    }
    l.found = out.size();
    c.thread_edges[tid] = assigned;
#pragma omp critical
    accumulate(c, l);
    gather_queues(local, offset, next, tid);
  }
  c.thread_edges.resize(team);
  return c;
}

namespace {

/// Scans the neighbors of every unvisited vertex in r and adopts the first
/// frontier member found. Caller owns the blocks covering r.
inline void scan_bottom_up(const edge_index_t* rs, const vertex_t* dst, const Bitmap& frontier, Bitmap& visited,
                           std::span<pred_t> pred, Bitmap& next, VertexRange r, LocalCounts& l)
{
  for_each_unset(visited, r, [&](vertex_t v) {
    for (edge_index_t e = rs[v]; e < rs[v + 1]; ++e) {
      const vertex_t w = dst[e];
      ++l.scanned;
      if (frontier.test(w)) {
        pred[v] = w;
        visited.set(v);
        next.set(v);
        ++l.found;
        l.degree_sum += row_degree(rs, v);
        break;
      }
    }
  });
}

} // namespace

StepCounters bottom_up_step(const CsrGraph& g, const Bitmap& frontier, Bitmap& visited, std::span<pred_t> pred,
                            Bitmap& next, unsigned threads)
{
  const edge_index_t* rs = g.row_starts().data();
  const vertex_t* dst = g.dst().data();
  const auto blocks = static_cast<std::int64_t>(visited.block_count());
  const vertex_t n = g.n();
  StepCounters c;

#pragma omp parallel num_threads(threads)
  {
    LocalCounts l;
#pragma omp for schedule(static) nowait
    for (std::int64_t b = 0; b < blocks; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      next.clear_blocks({ub, ub + 1});
      const auto begin = static_cast<vertex_t>(ub * Bitmap::kBlockBits);
      const auto end = static_cast<vertex_t>(std::min<std::uint64_t>((ub + 1) * Bitmap::kBlockBits, n));
      scan_bottom_up(rs, dst, frontier, visited, pred, next, {begin, end}, l);
    }
#pragma omp critical
    accumulate(c, l);
  }
  return c;
}

StepCounters bottom_up_step_balanced(const CsrGraph& g, const Bitmap& frontier, Bitmap& visited,
                                     std::span<pred_t> pred, Bitmap& next, PartitionSet& parts, unsigned threads)
{
  const edge_index_t* rs = g.row_starts().data();
  const vertex_t* dst = g.dst().data();
  const auto all = parts.partitions();
  parts.reset_cursor();
  StepCounters c;

#pragma omp parallel num_threads(threads)
  {
    LocalCounts l;
    for (std::size_t pos = parts.claim(); pos < all.size(); pos = parts.claim()) {
      const VertexRange r = all[pos];
      next.clear_blocks(Bitmap::blocks_of(r.begin, r.end));
      l.partition_total += r.size();
      scan_bottom_up(rs, dst, frontier, visited, pred, next, r, l);
    }
#pragma omp critical
    accumulate(c, l);
  }
  return c;
}

StepCounters bottom_up_step_reduced(const CsrGraph& g_desc, const Bitmap& frontier, Bitmap& visited,
                                    std::span<pred_t> pred, Bitmap& next, PartitionSet& parts, unsigned threads)
{
  const edge_index_t* rs = g_desc.row_starts().data();
  const vertex_t* dst = g_desc.dst().data();
  const auto all = parts.partitions();
  parts.reset_cursor();
  StepCounters c;

#pragma omp parallel num_threads(threads)
  {
    LocalCounts l;
    for (std::size_t pos = parts.claim(); pos < all.size(); pos = parts.claim()) {
      const VertexRange full = all[pos];
      VertexRange& live = parts.live_bound(pos);
      next.clear_blocks(Bitmap::blocks_of(full.begin, full.end));

      live = shrink_partition(live, visited);
      l.partition_total += live.size();

      // pass 1: the highest-degree neighbor only
      for_each_unset(visited, live, [&](vertex_t v) {
        if (rs[v] == rs[v + 1])
          return;
        ++l.scanned;
        const vertex_t w = dst[rs[v]];
        if (frontier.test(w)) {
          pred[v] = w;
          next.set(v);
          ++l.found;
          ++l.first_pass;
          l.degree_sum += row_degree(rs, v);
        }
      });
      visited.or_blocks(next, Bitmap::blocks_of(live.begin, live.end));

      live = shrink_partition(live, visited);

      // pass 2: the rest, descending degree, stop at the first hit
      for_each_unset(visited, live, [&](vertex_t v) {
        for (edge_index_t e = rs[v] + 1; e < rs[v + 1]; ++e) {
          const vertex_t w = dst[e];
          ++l.scanned;
          if (frontier.test(w)) {
            pred[v] = w;
            next.set(v);
            ++l.found;
            l.degree_sum += row_degree(rs, v);
            break;
          }
        }
      });
      visited.or_blocks(next, Bitmap::blocks_of(live.begin, live.end));
    }
#pragma omp critical
    accumulate(c, l);
  }
  return c;
}

} // namespace rcmbfs
