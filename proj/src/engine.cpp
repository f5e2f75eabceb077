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

#include "rcmbfs/engine.hpp"

#include "rcmbfs/kernels.hpp"

#include <chrono>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <ostream>

namespace rcmbfs {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void finish(const CsrGraph& g, BfsResult& r)
{
  std::uint64_t degree_sum = 0;
  std::uint64_t reached = 0;
  for (vertex_t v = 0; v < g.n(); ++v)
    if (r.predecessor[v] != kNoPredecessor) {
      degree_sum += g.degree(v);
      ++reached;
    }
  r.traversed_edges = degree_sum / 2;
  r.reached = reached;
}

} // namespace

std::string_view to_string(Direction d) noexcept
{
  return d == Direction::top_down ? "top_down" : "bottom_up";
}

std::string_view to_string(BfsMode m) noexcept
{
  switch (m) {
    case BfsMode::sequential: return "sequential";
    case BfsMode::level_sync: return "level_sync";
    case BfsMode::hybrid: return "hybrid";
    case BfsMode::hybrid_balanced: return "hybrid_balanced";
    case BfsMode::hybrid_reduced: return "hybrid_reduced";
  }
  return "unknown";
}

BfsMode parse_bfs_mode(std::string_view name)
{
  for (const auto m : {BfsMode::sequential, BfsMode::level_sync, BfsMode::hybrid, BfsMode::hybrid_balanced,
                       BfsMode::hybrid_reduced})
    if (to_string(m) == name)
      return m;
  throw ParameterError(fmt::format("unknown BFS mode '{}'", name));
}

void BfsParams::validate() const
{
  if (alpha < 1 || alpha > 128)
    throw ParameterError(fmt::format("alpha must be in [1, 128], got {}", alpha));
  if (beta < 1 || beta > 32)
    throw ParameterError(fmt::format("beta must be in [1, 32], got {}", beta));
  if (lambda < 1)
    throw ParameterError("lambda must be >= 1");
  if (threads < 1)
    throw ParameterError("threads must be >= 1");
}

Direction update_traversal_policy(Direction current, const PolicyCounters& c, const BfsParams& params) noexcept
{
  if (current == Direction::top_down)
    return c.frontier_edges * params.alpha > c.unexplored_edges ? Direction::bottom_up : Direction::top_down;
  return c.frontier_size * params.beta < c.n ? Direction::top_down : Direction::bottom_up;
}

BfsResult bfs_sequential(const CsrGraph& g, vertex_t source)
{
  if (source >= g.n())
    throw ParameterError(fmt::format("source {} out of range (n = {})", source, g.n()));
  BfsResult r;
  const auto t0 = clock_type::now();
  r.predecessor.assign(g.n(), kNoPredecessor);
  r.predecessor[source] = source;

  std::vector<vertex_t> queue;
  queue.reserve(g.n());
  queue.push_back(source);
  std::uint64_t unexplored = g.m_directed() - g.degree(source);
  std::size_t level_begin = 0;
  while (level_begin < queue.size()) {
    const auto t_level = clock_type::now();
    const std::size_t level_end = queue.size();
    LevelRecord rec;
    rec.frontier_size = level_end - level_begin;
    rec.unexplored_edges = unexplored;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const vertex_t v = queue[i];
      rec.frontier_edges += g.degree(v);
      for (const vertex_t w : g.adj(v)) {
        ++rec.scanned_edges;
        if (r.predecessor[w] == kNoPredecessor) {
          r.predecessor[w] = v;
          queue.push_back(w);
          unexplored -= g.degree(w);
        }
      }
    }
    rec.discovered = queue.size() - level_end;
    rec.seconds = seconds_since(t_level);
    r.levels.push_back(rec);
    level_begin = level_end;
  }
  r.elapsed_seconds = seconds_since(t0);
  finish(g, r);
  return r;
}

BfsEngine::BfsEngine(const CsrGraph& g, const BfsParams& params, const CsrGraph* descending)
  : g_(g)
  , desc_(descending)
  , params_(params)
  , visited_(g.n())
  , isolated_(g.n())
  , cur_(g.n())
  , next_(g.n())
{
  params_.validate();
  if (params_.mode == BfsMode::hybrid_reduced) {
    if (desc_ == nullptr)
      throw ParameterError("hybrid_reduced needs the descending-degree adjacency variant");
    if (desc_->n() != g.n() || desc_->m_directed() != g.m_directed())
      throw ParameterError("descending variant does not match the graph");
    for (vertex_t v = 0; v < g.n(); ++v)
      if (g.degree(v) == 0)
        isolated_.set(v);
  }
  if (params_.mode == BfsMode::hybrid_balanced || params_.mode == BfsMode::hybrid_reduced)
    parts_ = get_partitions(g.n(), params_.lambda, params_.threads);
}

BfsResult BfsEngine::run(vertex_t source)
{
  if (source >= g_.n())
    throw ParameterError(fmt::format("source {} out of range (n = {})", source, g_.n()));
  if (params_.mode == BfsMode::sequential)
    return bfs_sequential(g_, source);

  const unsigned threads = params_.threads;
  const BfsMode mode = params_.mode;
  const bool striped = mode == BfsMode::hybrid_balanced || mode == BfsMode::hybrid_reduced;
  BfsResult r;
  r.predecessor.resize(g_.n());

  const auto t0 = clock_type::now();
  const auto n_signed = static_cast<std::int64_t>(g_.n());
  auto* pred_data = r.predecessor.data();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t v = 0; v < n_signed; ++v)
    pred_data[v] = kNoPredecessor;

  // isolated vertices never need a parent search
  if (mode == BfsMode::hybrid_reduced)
    visited_.copy_blocks(isolated_, visited_.all_blocks());
  else
    visited_.clear();
  if (striped)
    parts_.reset_bounds();

  visited_.set(source);
  r.predecessor[source] = source;
  cur_.reset(source);

  Direction dir = Direction::top_down;
  bool bottom_up_seen = false;
  std::uint64_t n_f = 1;
  std::uint64_t m_f = g_.degree(source);
  std::uint64_t m_u = g_.m_directed() - m_f;
  const std::span<pred_t> pred(r.predecessor);

  while (n_f > 0) {
    const auto t_level = clock_type::now();
    LevelRecord rec;
    rec.direction = dir;
    rec.frontier_size = n_f;
    rec.frontier_edges = m_f;
    rec.unexplored_edges = m_u;

    StepCounters c;
    if (dir == Direction::top_down) {
      if (cur_.form() == Frontier::Form::bitmap)
        cur_.to_queue(threads);
      // striping pays off while hubs are in the frontier, i.e. before the
      // bottom-up phase; afterwards the plain kernel is enough
      if (striped && !bottom_up_seen)
        c = top_down_step_balanced(g_, cur_.queue(), visited_, pred, next_.queue(), threads);
      else
        c = top_down_step(g_, cur_.queue(), visited_, pred, next_.queue(), threads);
      next_.mark(Frontier::Form::queue);
    } else {
      if (cur_.form() == Frontier::Form::queue)
        cur_.to_bitmap(threads);
      switch (mode) {
        case BfsMode::hybrid_balanced:
          c = bottom_up_step_balanced(g_, cur_.bits(), visited_, pred, next_.bits(), parts_, threads);
          break;
        case BfsMode::hybrid_reduced:
          c = bottom_up_step_reduced(*desc_, cur_.bits(), visited_, pred, next_.bits(), parts_, threads);
          break;
        default:
          c = bottom_up_step(g_, cur_.bits(), visited_, pred, next_.bits(), threads);
          break;
      }
      next_.mark(Frontier::Form::bitmap);
      bottom_up_seen = true;
      if (params_.record_partitions && striped)
        r.partition_history.emplace_back(parts_.live_bounds().begin(), parts_.live_bounds().end());
    }

    rec.scanned_edges = c.scanned_edges;
    rec.discovered = c.discovered;
    rec.first_pass_found = c.first_pass_found;
    rec.partition_total = c.partition_total;
    rec.thread_edges = std::move(c.thread_edges);

    m_u -= c.discovered_degree_sum;
    m_f = c.discovered_degree_sum;
    n_f = c.discovered;
    if (mode != BfsMode::level_sync)
      dir = update_traversal_policy(dir, {m_f, m_u, n_f, g_.n()}, params_);
    std::swap(cur_, next_);

    rec.seconds = seconds_since(t_level);
    r.levels.push_back(rec);
  }
  r.elapsed_seconds = seconds_since(t0);
  finish(g_, r);
  return r;
}

BfsResult bfs_run(const CsrGraph& g, const CsrGraph* descending, vertex_t source, const BfsParams& params)
{
  if (params.mode == BfsMode::sequential)
    return bfs_sequential(g, source);
  BfsEngine engine(g, params, descending);
  return engine.run(source);
}

void write_trace_header(std::ostream& out)
{
  out << "round,source,level,direction,frontier_size,frontier_edges,unexplored_edges,scanned_edges,"
         "discovered,first_pass_found,partition_total,seconds\n";
}

void write_trace_rows(std::ostream& out, unsigned round, vertex_t source, std::span<const LevelRecord> levels)
{
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto& l = levels[k];
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{},{:.9f}\n", round, source, k, to_string(l.direction),
               l.frontier_size, l.frontier_edges, l.unexplored_edges, l.scanned_edges, l.discovered,
               l.first_pass_found, l.partition_total, l.seconds);
  }
}

} // namespace rcmbfs
