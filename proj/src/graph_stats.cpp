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

#include "rcmbfs/graph_stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace rcmbfs {

ComponentSummary connected_components(const CsrGraph& g)
{
  constexpr vertex_t unlabeled = ~vertex_t{0};
  ComponentSummary out;
  out.label.assign(g.n(), unlabeled);
  std::vector<vertex_t> queue;
  queue.reserve(g.n());
  vertex_t next_label = 0;
  for (vertex_t root = 0; root < g.n(); ++root) {
    if (out.label[root] != unlabeled)
      continue;
    const vertex_t id = next_label++;
    if (g.degree(root) == 0) {
      out.label[root] = id;
      ++out.isolated;
      continue;
    }
    queue.clear();
    queue.push_back(root);
    out.label[root] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const vertex_t w : g.adj(queue[head]))
        if (out.label[w] == unlabeled) {
          out.label[w] = id;
          queue.push_back(w);
        }
    out.sizes.push_back(static_cast<vertex_t>(queue.size()));
  }
  std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
  return out;
}

vertex_t count_isolated(const EdgeList& list)
{
  std::vector<bool> touched(list.n_declared, false);
  for (const auto [u, v] : list.edges)
    if (u != v) {
      touched[u] = true;
      touched[v] = true;
    }
  return static_cast<vertex_t>(std::count(touched.begin(), touched.end(), false));
}

vertex_t count_isolated(const CsrGraph& g)
{
  const auto d = g.degrees();
  return static_cast<vertex_t>(std::count(d.begin(), d.end(), vertex_t{0}));
}

DegreeProfile degree_profile(const CsrGraph& g)
{
  std::vector<vertex_t> d;
  d.reserve(g.n());
  for (const vertex_t x : g.degrees())
    if (x != 0)
      d.push_back(x);
  DegreeProfile p;
  if (d.empty())
    return p;
  std::sort(d.begin(), d.end());
  auto rank = [&](double q) {
    const auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(d.size())));
    return d[std::min(d.size() - 1, idx == 0 ? 0 : idx - 1)];
  };
  p.min = d.front();
  p.p50 = rank(0.50);
  p.p90 = rank(0.90);
  p.p99 = rank(0.99);
  p.max = d.back();
  double sum = 0;
  for (const vertex_t x : d)
    sum += x;
  p.mean = sum / static_cast<double>(d.size());
  return p;
}

} // namespace rcmbfs
