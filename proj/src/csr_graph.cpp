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

#include "rcmbfs/csr_graph.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace rcmbfs {

CsrGraph::CsrGraph(std::vector<edge_index_t> row_starts, std::vector<vertex_t> dst)
  : row_starts_(std::move(row_starts))
  , dst_(std::move(dst))
{
  if (row_starts_.empty() || row_starts_.front() != 0 || row_starts_.back() != dst_.size())
    throw GraphError("row_starts must start at 0 and end at the neighbor count");
  n_ = static_cast<vertex_t>(row_starts_.size() - 1);
  degrees_.resize(n_);
  for (vertex_t v = 0; v < n_; ++v) {
    if (row_starts_[v + 1] < row_starts_[v])
      throw GraphError(fmt::format("row_starts decreases at vertex {}", v));
    degrees_[v] = static_cast<vertex_t>(row_starts_[v + 1] - row_starts_[v]);
  }
  for (std::size_t i = 0; i < dst_.size(); ++i)
    if (dst_[i] >= n_)
      throw GraphError(fmt::format("neighbor entry {} is {} but n = {}", i, dst_[i], n_));
}

std::span<const vertex_t> CsrGraph::neighbors(vertex_t v) const
{
  if (v >= n_)
    throw std::out_of_range(fmt::format("vertex {} out of range (n = {})", v, n_));
  return adj(v);
}

CsrGraph build_csr(const EdgeList& list)
{
  const vertex_t n = list.n_declared;
  const auto& edges = list.edges;

  std::vector<edge_index_t> row_starts(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n)
      throw GraphError(fmt::format("edge {} = ({}, {}) has an endpoint >= n = {}", i, u, v, n));
    if (u == v)
      continue;
    ++row_starts[u + 1];
    ++row_starts[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v)
    row_starts[v + 1] += row_starts[v];

  std::vector<vertex_t> raw(row_starts[n]);
  std::vector<edge_index_t> fill(row_starts.begin(), row_starts.end() - 1);
  for (const auto [u, v] : edges) {
    if (u == v)
      continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  // sort + dedup each list, compacting in place
  std::vector<edge_index_t> out_starts(static_cast<std::size_t>(n) + 1, 0);
  edge_index_t out = 0;
  for (vertex_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(row_starts[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(row_starts[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    const auto kept = static_cast<edge_index_t>(last - first);
    std::copy(first, last, raw.begin() + static_cast<std::ptrdiff_t>(out));
    out += kept;
    out_starts[v + 1] = out;
  }
  raw.resize(out);
  raw.shrink_to_fit();
  return CsrGraph(std::move(out_starts), std::move(raw));
}

std::uint64_t bandwidth(const CsrGraph& g)
{
  std::uint64_t bw = 0;
  for (vertex_t i = 0; i < g.n(); ++i)
    for (const vertex_t j : g.adj(i))
      if (i > j)
        bw = std::max<std::uint64_t>(bw, i - j);
  return bw;
}

std::optional<std::string> check_invariants(const CsrGraph& g)
{
  for (vertex_t v = 0; v < g.n(); ++v) {
    auto nbrs = g.adj(v);
    std::vector<vertex_t> sorted(nbrs.begin(), nbrs.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return fmt::format("vertex {} has a duplicate neighbor", v);
    for (const vertex_t w : nbrs) {
      if (w == v)
        return fmt::format("self-loop at {}", v);
      auto back = g.adj(w);
      if (std::find(back.begin(), back.end(), v) == back.end())
        return fmt::format("edge ({}, {}) has no reverse", v, w);
    }
  }
  return std::nullopt;
}

std::uint64_t graph_fingerprint(const CsrGraph& g)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x, int bytes) {
    for (int b = 0; b < bytes; ++b) {
      h ^= (x >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.n(), 4);
  for (const auto off : g.row_starts())
    mix(off, 8);
  for (const auto w : g.dst())
    mix(w, 4);
  return h;
}

EdgeList to_edge_list(const CsrGraph& g)
{
  EdgeList out{g.n(), {}};
  out.edges.reserve(g.m_undirected());
  for (vertex_t u = 0; u < g.n(); ++u)
    for (const vertex_t v : g.adj(u))
      if (u < v)
        out.edges.push_back({u, v});
  return out;
}

} // namespace rcmbfs
