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

#include "rcmbfs/validator.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <numeric>

namespace rcmbfs {

namespace {

class DisjointSets
{
public:
  explicit DisjointSets(std::size_t n)
    : parent_(n)
    , rank_(n, 0)
  {
    std::iota(parent_.begin(), parent_.end(), vertex_t{0});
  }

  vertex_t find(vertex_t x) noexcept
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(vertex_t a, vertex_t b) noexcept
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (rank_[a] < rank_[b])
      std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b])
      ++rank_[a];
  }

private:
  std::vector<vertex_t> parent_;
  std::vector<std::uint8_t> rank_;
};

void fail(RuleResult& r, std::string what)
{
  if (r.passed) {
    r.passed = false;
    r.counterexample = std::move(what);
  }
}

} // namespace

std::string_view to_string(ValidationRule rule) noexcept
{
  switch (rule) {
    case ValidationRule::root_is_own_parent: return "root_is_own_parent";
    case ValidationRule::tree_edges_exist: return "tree_edges_exist";
    case ValidationRule::levels_consistent: return "levels_consistent";
    case ValidationRule::edge_level_span: return "edge_level_span";
    case ValidationRule::reachability: return "reachability";
  }
  return "unknown";
}

std::vector<std::int64_t> levels_from_predecessors(std::span<const pred_t> pred, vertex_t source)
{
  constexpr std::int64_t unknown = -2;
  constexpr std::int64_t broken = -3;
  const auto n = pred.size();
  std::vector<std::int64_t> level(n, unknown);
  std::vector<std::uint8_t> on_path(n, 0);
  std::vector<vertex_t> path;
  if (source < n)
    level[source] = 0;

  for (std::size_t start = 0; start < n; ++start) {
    if (level[start] != unknown)
      continue;
    if (pred[start] == kNoPredecessor) {
      level[start] = -1;
      continue;
    }
    path.clear();
    auto v = static_cast<vertex_t>(start);
    std::int64_t base = broken;
    while (true) {
      if (level[v] != unknown) {
        base = level[v] >= 0 ? level[v] : broken;
        break;
      }
      if (on_path[v] || pred[v] == kNoPredecessor || pred[v] < 0 || static_cast<std::uint64_t>(pred[v]) >= n) {
        base = broken;
        if (!on_path[v]) {
          on_path[v] = 1;
          path.push_back(v);
        }
        break;
      }
      on_path[v] = 1;
      path.push_back(v);
      v = static_cast<vertex_t>(pred[v]);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      on_path[*it] = 0;
      if (base == broken) {
        level[*it] = broken;
      } else {
        level[*it] = ++base;
      }
    }
  }
  for (auto& l : level)
    if (l < 0)
      l = -1;
  return level;
}

ValidationReport validate(const CsrGraph& g, std::span<const Edge> edges, vertex_t source,
                          std::span<const pred_t> pred)
{
  const vertex_t n = g.n();
  if (pred.size() != n)
    throw ParameterError(fmt::format("predecessor array has {} entries, graph has {} vertices", pred.size(), n));
  if (source >= n)
    throw ParameterError(fmt::format("source {} out of range (n = {})", source, n));

  ValidationReport rep;
  for (std::size_t i = 0; i < kValidationRuleCount; ++i)
    rep.checks[i].rule = static_cast<ValidationRule>(i);
  auto& root = rep.checks[0];
  auto& tree = rep.checks[1];
  auto& chains = rep.checks[2];
  auto& span_rule = rep.checks[3];
  auto& reach = rep.checks[4];

  if (pred[source] != source)
    fail(root, fmt::format("pred[{}] = {}", source, pred[source]));

  for (vertex_t v = 0; v < n; ++v) {
    if (v == source || pred[v] == kNoPredecessor)
      continue;
    const pred_t p = pred[v];
    if (p < 0 || p >= static_cast<pred_t>(n)) {
      fail(tree, fmt::format("pred[{}] = {} is not a vertex", v, p));
      continue;
    }
    const auto nbrs = g.adj(v);
    if (std::find(nbrs.begin(), nbrs.end(), static_cast<vertex_t>(p)) == nbrs.end())
      fail(tree, fmt::format("tree edge ({}, {}) is not in the graph", v, p));
  }

  rep.derived_levels = levels_from_predecessors(pred, source);
  const auto& level = rep.derived_levels;
  for (vertex_t v = 0; v < n; ++v)
    if (pred[v] != kNoPredecessor && level[v] < 0) {
      fail(chains, fmt::format("pred chain from {} does not reach the source", v));
      break;
    }

  DisjointSets components(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n)
      throw ParameterError(fmt::format("edge {} = ({}, {}) out of range", i, u, v));
    components.unite(u, v);
    if (level[u] >= 0 && level[v] >= 0 && std::abs(level[u] - level[v]) > 1)
      fail(span_rule, fmt::format("edge ({}, {}) joins levels {} and {}", u, v, level[u], level[v]));
  }

  const vertex_t source_root = components.find(source);
  for (vertex_t v = 0; v < n; ++v) {
    const bool reached = pred[v] != kNoPredecessor;
    const bool connected = components.find(v) == source_root;
    if (reached != connected) {
      fail(reach, reached ? fmt::format("vertex {} reached but not connected to the source", v)
                          : fmt::format("vertex {} connected to the source but unreached", v));
      break;
    }
  }

  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const RuleResult& r) { return r.passed; });
  return rep;
}

ValidationReport validate(const CsrGraph& g, vertex_t source, std::span<const pred_t> pred)
{
  const auto list = to_edge_list(g);
  return validate(g, list.edges, source, pred);
}

std::string ValidationReport::to_text() const
{
  std::string out = fmt::format("validation: {}\n", passed ? "PASSED" : "FAILED");
  for (const auto& c : checks) {
    if (c.passed)
      out += fmt::format("  {:<20} pass\n", to_string(c.rule));
    else
      out += fmt::format("  {:<20} FAIL  {}\n", to_string(c.rule), c.counterexample);
  }
  return out;
}

Metadata ValidationReport::to_key_values() const
{
  Metadata kv{{"validation.passed", passed ? "true" : "false"}};
  for (const auto& c : checks) {
    const auto key = fmt::format("validation.{}", to_string(c.rule));
    kv.emplace_back(key, c.passed ? "pass" : "fail");
    if (!c.passed)
      kv.emplace_back(key + ".counterexample", c.counterexample);
  }
  return kv;
}

} // namespace rcmbfs
