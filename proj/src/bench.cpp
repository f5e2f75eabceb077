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

#include "rcmbfs/bench.hpp"

#include "rcmbfs/engine.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <fmt/ostream.h>
#include <ostream>

namespace rcmbfs {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::uint64_t bounded(std::uint64_t x, std::uint64_t range) noexcept
{
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * range) >> 64);
}

unsigned scale_of(vertex_t n) noexcept
{
  return n <= 1 ? 1 : static_cast<unsigned>(std::bit_width(n - 1));
}

} // namespace

ReorderSpec ReorderSpec::parse(std::string_view text)
{
  if (text == "none")
    return {Kind::none, 1.0};
  if (text == "rcm")
    return {Kind::rcm, 1.0};
  if (text.starts_with("partial:")) {
    const auto num = std::string(text.substr(8));
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(num, &used);
      if (used != num.size())
        throw std::invalid_argument(num);
    } catch (const std::exception&) {
      throw ParameterError(fmt::format("bad partial ratio '{}'", num));
    }
    if (!(p > 0.0 && p <= 1.0))
      throw ParameterError(fmt::format("partial ratio must be in (0, 1], got {}", p));
    return {Kind::partial, p};
  }
  throw ParameterError(fmt::format("unknown reorder spec '{}' (none | rcm | partial:<p>)", text));
}

std::string ReorderSpec::to_string() const
{
  switch (kind) {
    case Kind::none: return "none";
    case Kind::rcm: return "rcm";
    case Kind::partial: return fmt::format("partial:{}", ratio);
  }
  return "none";
}

PreparedGraph prepare_graph(const GraphSource& source, const ReorderSpec& reorder, bool need_descending,
                            unsigned threads)
{
  PreparedGraph pg;
  auto t = clock_type::now();
  if (source.generate) {
    pg.raw = kronecker_generate(*source.generate, threads);
    pg.times.generation = seconds_since(t);
    pg.scale = source.generate->scale;
  } else {
    const auto format = source.format.value_or(guess_edge_format(source.input));
    auto vertices = source.vertices;
    if (!vertices) {
      const auto meta_path = sidecar_path(source.input);
      if (std::filesystem::exists(meta_path)) {
        const auto meta = read_metadata(meta_path);
        if (auto it = meta.find("vertices"); it != meta.end())
          vertices = static_cast<vertex_t>(std::stoul(it->second));
      }
    }
    pg.raw = read_edges(source.input, format, vertices);
    pg.times.load = seconds_since(t);
    pg.scale = scale_of(pg.raw.n_declared);
  }

  t = clock_type::now();
  pg.graph = build_csr(pg.raw);
  pg.times.csr_build = seconds_since(t);

  if (reorder.kind != ReorderSpec::Kind::none) {
    t = clock_type::now();
    auto result = reorder.kind == ReorderSpec::Kind::rcm ? rcm(pg.graph) : partial_rcm(pg.graph, reorder.ratio);
    pg.graph = apply_permutation(pg.graph, result.permutation);
    pg.times.reorder = seconds_since(t);
    pg.raw = relabel_edges(pg.raw, result.permutation);
    pg.reorder = std::move(result);
  }

  if (need_descending) {
    t = clock_type::now();
    pg.descending = degree_sort_adjacency(pg.graph, AdjacencyOrder::descending_degree);
    pg.times.degree_sort = seconds_since(t);
  }
  return pg;
}

std::vector<vertex_t> choose_sources(const PreparedGraph& pg, unsigned rounds, std::uint64_t seed)
{
  const vertex_t n = pg.graph.n();
  const Permutation* perm = pg.reorder ? &pg.reorder->permutation : nullptr;
  std::vector<vertex_t> candidates;
  for (vertex_t old = 0; old < n; ++old) {
    const vertex_t now = perm ? perm->new_id(old) : old;
    if (pg.graph.degree(now) != 0)
      candidates.push_back(old);
  }
  if (candidates.empty())
    throw ParameterError("graph has no non-isolated vertex to start from");
  std::size_t k = rounds;
  if (k > candidates.size()) {
    fmt::print(stderr, "warning: {} rounds requested but only {} non-isolated vertices; clamping\n", rounds,
               candidates.size());
    k = candidates.size();
  }
  SplitMix64 rng(SplitMix64::mix(seed ^ 0x3c6ef372fe94f82bULL));
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + bounded(rng.next(), candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(k);
  if (perm)
    for (auto& v : candidates)
      v = perm->new_id(v);
  return candidates;
}

TepsStats teps_stats(std::span<const double> teps)
{
  TepsStats s;
  if (teps.empty())
    return s;
  std::vector<double> sorted(teps.begin(), teps.end());
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  const auto k = sorted.size();
  s.median = k % 2 ? sorted[k / 2] : 0.5 * (sorted[k / 2 - 1] + sorted[k / 2]);
  double inv = 0;
  for (const double x : sorted)
    inv += x > 0 ? 1.0 / x : 0.0;
  s.harmonic_mean = inv > 0 ? static_cast<double>(k) / inv : 0.0;
  return s;
}

ValidationFailure::ValidationFailure(ValidationReport report, unsigned round, vertex_t source)
  : Error(fmt::format("round {} (source {}) failed validation\n{}", round, source, report.to_text()))
  , report_(std::move(report))
  , round_(round)
  , source_(source)
{
}

BenchSummary run_rounds(const PreparedGraph& pg, std::span<const vertex_t> sources, const BfsParams& params,
                        bool validate_rounds, const RoundObserver& observer)
{
  BenchSummary s;
  s.params = params;
  s.times = pg.times;
  BfsEngine engine(pg.graph, params, pg.descending ? &*pg.descending : nullptr);

  std::uint64_t checksum = 0xcbf29ce484222325ULL;
  std::vector<double> teps;
  for (unsigned r = 0; r < sources.size(); ++r) {
    const vertex_t src = sources[r];
    const BfsResult result = engine.run(src);

    RoundRecord rec;
    rec.round = r;
    rec.source = src;
    rec.traversed_edges = result.traversed_edges;
    rec.reached = result.reached;
    rec.levels = result.levels.size();
    rec.seconds = std::max(result.elapsed_seconds, 1e-9);
    rec.teps = static_cast<double>(rec.traversed_edges) / rec.seconds;
    for (const auto& e : pg.raw.edges)
      if (result.predecessor[e.u] != kNoPredecessor)
        ++rec.traversed_edges_raw;

    if (validate_rounds) {
      auto report = validate(pg.graph, pg.raw.edges, src, result.predecessor);
      if (!report.passed)
        throw ValidationFailure(std::move(report), r, src);
      rec.validated = true;
      for (const auto l : report.derived_levels) {
        checksum ^= static_cast<std::uint64_t>(l);
        checksum *= 0x100000001b3ULL;
      }
    }
    if (observer)
      observer(r, src, result);

    teps.push_back(rec.teps);
    s.rounds.push_back(rec);
    s.traces.push_back(result.levels);
  }
  s.level_checksum = validate_rounds ? checksum : 0;
  s.teps = teps_stats(teps);

  for (const auto& trace : s.traces) {
    if (s.levels.size() < trace.size())
      s.levels.resize(trace.size());
    for (std::size_t k = 0; k < trace.size(); ++k) {
      auto& a = s.levels[k];
      a.level = k;
      ++a.rounds;
      (trace[k].direction == Direction::top_down ? a.top_down : a.bottom_up) += 1;
      a.mean_frontier += static_cast<double>(trace[k].frontier_size);
      a.mean_scanned += static_cast<double>(trace[k].scanned_edges);
      a.mean_partition_total += static_cast<double>(trace[k].partition_total);
      a.mean_seconds += trace[k].seconds;
    }
  }
  for (auto& a : s.levels) {
    const auto k = static_cast<double>(std::max<std::size_t>(a.rounds, 1));
    a.mean_frontier /= k;
    a.mean_scanned /= k;
    a.mean_partition_total /= k;
    a.mean_seconds /= k;
  }
  return s;
}

void write_summary_text(std::ostream& out, const BenchSummary& s, std::string_view title)
{
  if (!title.empty())
    fmt::print(out, "{}\n", title);
  const auto& p = s.params;
  fmt::print(out, "mode {}  threads {}  alpha {}  beta {}  lambda {}\n", to_string(p.mode), p.threads, p.alpha,
             p.beta, p.lambda);
  fmt::print(out, "preprocessing: load {:.3f}s  generation {:.3f}s  csr {:.3f}s  reorder {:.3f}s  degree-sort {:.3f}s\n",
             s.times.load, s.times.generation, s.times.csr_build, s.times.reorder, s.times.degree_sort);
  double edges = 0;
  double raw = 0;
  double secs = 0;
  for (const auto& r : s.rounds) {
    edges += static_cast<double>(r.traversed_edges);
    raw += static_cast<double>(r.traversed_edges_raw);
    secs += r.seconds;
  }
  const auto k = static_cast<double>(std::max<std::size_t>(s.rounds.size(), 1));
  fmt::print(out, "rounds {}  mean time {:.6f}s  mean traversed edges {:.0f} (raw input pairs {:.0f})\n",
             s.rounds.size(), secs / k, edges / k, raw / k);
  fmt::print(out, "TEPS  min {:.4e}  median {:.4e}  max {:.4e}  harmonic mean {:.4e}\n", s.teps.min, s.teps.median,
             s.teps.max, s.teps.harmonic_mean);
  fmt::print(out, "{:>5} {:>6} {:>4} {:>4} {:>14} {:>14} {:>14} {:>10}\n", "level", "rounds", "td", "bu",
             "mean frontier", "mean scanned", "mean parts", "mean s");
  for (const auto& a : s.levels)
    fmt::print(out, "{:>5} {:>6} {:>4} {:>4} {:>14.1f} {:>14.1f} {:>14.1f} {:>10.6f}\n", a.level, a.rounds,
               a.top_down, a.bottom_up, a.mean_frontier, a.mean_scanned, a.mean_partition_total, a.mean_seconds);
}

void write_rounds_csv(std::ostream& out, const BenchSummary& s)
{
  out << "round,source,traversed_edges,traversed_edges_raw,reached,levels,seconds,teps,validated\n";
  for (const auto& r : s.rounds)
    fmt::print(out, "{},{},{},{},{},{},{:.9f},{:.6e},{}\n", r.round, r.source, r.traversed_edges,
               r.traversed_edges_raw, r.reached, r.levels, r.seconds, r.teps, r.validated ? 1 : 0);
}

void write_traces_csv(std::ostream& out, const BenchSummary& s)
{
  write_trace_header(out);
  for (std::size_t i = 0; i < s.rounds.size(); ++i)
    write_trace_rows(out, s.rounds[i].round, s.rounds[i].source, s.traces[i]);
}

SweepResult run_sweep(const PreparedGraph& pg, std::span<const vertex_t> sources, const BfsParams& base,
                      const SweepGrid& grid, bool validate_rounds)
{
  auto values = [](const std::vector<unsigned>& v, unsigned fallback) {
    return v.empty() ? std::vector<unsigned>{fallback} : v;
  };
  SweepResult out;
  for (const unsigned a : values(grid.alpha, base.alpha))
    for (const unsigned b : values(grid.beta, base.beta))
      for (const unsigned l : values(grid.lambda, base.lambda)) {
        BfsParams p = base;
        p.alpha = a;
        p.beta = b;
        p.lambda = l;
        const auto summary = run_rounds(pg, sources, p, validate_rounds);
        out.points.push_back({a, b, l, summary.teps, summary.level_checksum});
        if (out.points.back().teps.median > out.points[out.best].teps.median)
          out.best = out.points.size() - 1;
      }
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& r)
{
  out << "alpha,beta,lambda,median_teps,harmonic_mean_teps,min_teps,max_teps,level_checksum,best\n";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& p = r.points[i];
    fmt::print(out, "{},{},{},{:.6e},{:.6e},{:.6e},{:.6e},{:016x},{}\n", p.alpha, p.beta, p.lambda, p.teps.median,
               p.teps.harmonic_mean, p.teps.min, p.teps.max, p.level_checksum, i == r.best ? 1 : 0);
  }
}

GraphReport graph_report(const EdgeList& raw, const CsrGraph& g)
{
  GraphReport r;
  r.n = g.n();
  r.raw_edges = raw.edges.size();
  r.undirected_edges = g.m_undirected();
  r.isolated = count_isolated(g);
  r.non_isolated = g.n() - r.isolated;
  r.degrees = degree_profile(g);
  r.bandwidth = bandwidth(g);
  const auto comps = connected_components(g);
  r.components = comps.sizes.size();
  r.largest_components.assign(comps.sizes.begin(),
                              comps.sizes.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(5, comps.sizes.size())));
  r.largest_component_fraction =
    r.non_isolated && !comps.sizes.empty() ? static_cast<double>(comps.sizes.front()) / r.non_isolated : 0.0;
  r.fingerprint = graph_fingerprint(g);
  return r;
}

void write_graph_report(std::ostream& out, const GraphReport& r)
{
  fmt::print(out, "vertices            {}\n", r.n);
  fmt::print(out, "raw edge pairs      {}\n", r.raw_edges);
  fmt::print(out, "undirected edges    {}\n", r.undirected_edges);
  fmt::print(out, "isolated vertices   {} ({:.6f})\n", r.isolated, r.n ? double(r.isolated) / r.n : 0.0);
  fmt::print(out, "non-isolated        {}\n", r.non_isolated);
  fmt::print(out, "degree              min {} p50 {} p90 {} p99 {} max {} mean {:.3f}\n", r.degrees.min, r.degrees.p50,
             r.degrees.p90, r.degrees.p99, r.degrees.max, r.degrees.mean);
  fmt::print(out, "bandwidth           {}\n", r.bandwidth);
  fmt::print(out, "components          {} (excluding isolated)\n", r.components);
  fmt::print(out, "largest components  {}\n", fmt::join(r.largest_components, " "));
  fmt::print(out, "largest fraction    {:.6f}\n", r.largest_component_fraction);
  fmt::print(out, "fingerprint         {:016x}\n", r.fingerprint);
}

} // namespace rcmbfs
