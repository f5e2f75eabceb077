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

#include "rcmbfs/reorder.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace rcmbfs {

Permutation Permutation::identity(vertex_t n)
{
  std::vector<vertex_t> ids(n);
  for (vertex_t i = 0; i < n; ++i)
    ids[i] = i;
  Permutation p;
  p.old_to_new_ = ids;
  p.new_to_old_ = std::move(ids);
  return p;
}

Permutation Permutation::from_new_to_old(std::vector<vertex_t> new_to_old)
{
  const auto n = new_to_old.size();
  std::vector<vertex_t> inv(n, ~vertex_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    const vertex_t old = new_to_old[i];
    if (old >= n)
      throw ParameterError(fmt::format("permutation entry {} = {} out of range", i, old));
    if (inv[old] != ~vertex_t{0})
      throw ParameterError(fmt::format("permutation maps two ids to {}", old));
    inv[old] = static_cast<vertex_t>(i);
  }
  Permutation p;
  p.new_to_old_ = std::move(new_to_old);
  p.old_to_new_ = std::move(inv);
  return p;
}

Permutation Permutation::inverse() const
{
  Permutation p;
  p.new_to_old_ = old_to_new_;
  p.old_to_new_ = new_to_old_;
  return p;
}

namespace {

RcmResult cuthill_mckee_reversed(const CsrGraph& g, vertex_t limit_hint, bool partial)
{
  const vertex_t n = g.n();
  const auto deg = g.degrees();
  auto by_degree = [deg](vertex_t a, vertex_t b) {
    return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
  };

  std::vector<vertex_t> vplus;
  vplus.reserve(n);
  for (vertex_t v = 0; v < n; ++v)
    if (deg[v] != 0)
      vplus.push_back(v);
  std::sort(vplus.begin(), vplus.end(), by_degree);

  const auto n_plus = static_cast<vertex_t>(vplus.size());
  const vertex_t limit = partial ? std::min(limit_hint, n_plus) : n_plus;

  std::vector<vertex_t> order;
  order.reserve(limit);
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<vertex_t> sorted_nbrs;
  std::vector<VertexRange> traversal_ranges;

  std::size_t min_index = 0;
  std::size_t slow = 0;
  while (order.size() < limit) {
    // next component starts at the unvisited vertex of minimal degree
    while (visited[vplus[min_index]])
      ++min_index;
    const vertex_t start = vplus[min_index++];
    visited[start] = 1;
    const auto comp_begin = static_cast<vertex_t>(order.size());
    order.push_back(start);
    slow = comp_begin;

    while (slow < order.size() && order.size() < limit) {
      const auto nbrs = g.adj(order[slow]);
      sorted_nbrs.assign(nbrs.begin(), nbrs.end());
      std::sort(sorted_nbrs.begin(), sorted_nbrs.end(), by_degree);
      for (const vertex_t w : sorted_nbrs) {
        if (visited[w])
          continue;
        visited[w] = 1;
        order.push_back(w);
        if (order.size() == limit)
          break;
      }
      ++slow;
    }
    traversal_ranges.push_back({comp_begin, static_cast<vertex_t>(order.size())});
  }

  const auto placed = static_cast<vertex_t>(order.size());
  std::vector<vertex_t> new_to_old(order.rbegin(), order.rend());
  new_to_old.reserve(n);
  for (vertex_t v = 0; v < n; ++v)
    if (deg[v] != 0 && !visited[v])
      new_to_old.push_back(v);
  for (vertex_t v = 0; v < n; ++v)
    if (deg[v] == 0)
      new_to_old.push_back(v);

  RcmRunStats stats;
  stats.n_non_isolated = n_plus;
  stats.relabeled = placed;
  vertex_t largest = 0;
  for (auto it = traversal_ranges.rbegin(); it != traversal_ranges.rend(); ++it) {
    stats.component_ranges.push_back({placed - it->end, placed - it->begin});
    largest = std::max(largest, it->size());
  }
  stats.largest_component_fraction = n_plus ? static_cast<double>(largest) / n_plus : 0.0;

  return {Permutation::from_new_to_old(std::move(new_to_old)), std::move(stats)};
}

} // namespace

RcmResult rcm(const CsrGraph& g)
{
  return cuthill_mckee_reversed(g, 0, false);
}

RcmResult partial_rcm(const CsrGraph& g, double ratio)
{
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw ParameterError(fmt::format("partial RCM ratio must be in (0, 1], got {}", ratio));
  const auto n_plus = static_cast<double>(std::count_if(g.degrees().begin(), g.degrees().end(), [](vertex_t d) {
    return d != 0;
  }));
  const auto limit = static_cast<vertex_t>(std::ceil(ratio * n_plus));
  return cuthill_mckee_reversed(g, limit, true);
}

CsrGraph apply_permutation(const CsrGraph& g, const Permutation& perm)
{
  if (perm.size() != g.n())
    throw ParameterError(fmt::format("permutation size {} does not match graph size {}", perm.size(), g.n()));
  const vertex_t n = g.n();
  std::vector<edge_index_t> row_starts(static_cast<std::size_t>(n) + 1, 0);
  for (vertex_t u = 0; u < n; ++u)
    row_starts[u + 1] = row_starts[u] + g.degree(perm.old_id(u));
  std::vector<vertex_t> dst(g.m_directed());
  for (vertex_t u = 0; u < n; ++u) {
    auto out = dst.begin() + static_cast<std::ptrdiff_t>(row_starts[u]);
    auto it = out;
    for (const vertex_t w : g.adj(perm.old_id(u)))
      *it++ = perm.new_id(w);
    std::sort(out, it);
  }
  return CsrGraph(std::move(row_starts), std::move(dst));
}

EdgeList relabel_edges(const EdgeList& list, const Permutation& perm)
{
  if (perm.size() != list.n_declared)
    throw ParameterError("permutation size does not match edge list");
  EdgeList out{list.n_declared, std::vector<Edge>(list.edges.size())};
  for (std::size_t i = 0; i < list.edges.size(); ++i)
    out.edges[i] = {perm.new_id(list.edges[i].u), perm.new_id(list.edges[i].v)};
  return out;
}

CsrGraph degree_sort_adjacency(const CsrGraph& g, AdjacencyOrder order)
{
  const auto deg = g.degrees();
  std::vector<edge_index_t> row_starts(g.row_starts().begin(), g.row_starts().end());
  std::vector<vertex_t> dst(g.dst().begin(), g.dst().end());
  for (vertex_t v = 0; v < g.n(); ++v) {
    auto first = dst.begin() + static_cast<std::ptrdiff_t>(row_starts[v]);
    auto last = dst.begin() + static_cast<std::ptrdiff_t>(row_starts[v + 1]);
    if (order == AdjacencyOrder::ascending_degree)
      std::sort(first, last, [deg](vertex_t a, vertex_t b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
    else
      std::sort(first, last, [deg](vertex_t a, vertex_t b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
  }
  return CsrGraph(std::move(row_starts), std::move(dst));
}

void write_permutation(const std::filesystem::path& path, const Permutation& perm, const Metadata& meta)
{
  write_u32_array(path, perm.new_to_old());
  write_metadata(sidecar_path(path), meta);
}

Permutation read_permutation(const std::filesystem::path& path)
{
  return Permutation::from_new_to_old(read_u32_array(path));
}

} // namespace rcmbfs
