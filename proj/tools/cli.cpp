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

#include "cli.hpp"

#include "rcmbfs/bench.hpp"
#include "rcmbfs/engine.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rcmbfs::cli {

namespace {

struct GraphOptions
{
  unsigned scale = 0;
  unsigned edgefactor = 16;
  std::uint64_t graph_seed = 0;
  bool graph_seed_set = false;
  std::string initiator = "0.57,0.19,0.19,0.05";
  std::string input;
  std::string format;
  vertex_t vertices = 0;
};

struct BfsOptions
{
  std::string mode = "hybrid_reduced";
  unsigned alpha = 64;
  unsigned beta = 8;
  unsigned lambda = 0;
  unsigned threads = 1;
  unsigned rounds = 64;
  std::uint64_t seed = 1;
  std::string reorder = "none";
  bool no_validate = false;
};

std::array<double, 4> parse_initiator(const std::string& text)
{
  std::array<double, 4> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 4)
      throw ParameterError("initiator takes exactly four values");
    try {
      out[i++] = std::stod(item);
    } catch (const std::exception&) {
      throw ParameterError(fmt::format("bad initiator value '{}'", item));
    }
  }
  if (i != 4)
    throw ParameterError("initiator takes exactly four values");
  return out;
}

std::vector<unsigned> parse_grid(const std::string& text)
{
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<unsigned>(std::stoul(item)));
    } catch (const std::exception&) {
      throw ParameterError(fmt::format("bad grid value '{}'", item));
    }
  }
  return out;
}

void add_input_options(CLI::App* cmd, GraphOptions& g, bool required)
{
  auto* in = cmd->add_option("--input", g.input, "Edge list file");
  if (required)
    in->required();
  cmd->add_option("--format", g.format, "text | binary (default: from extension)");
  cmd->add_option("--vertices", g.vertices, "Vertex count (default: sidecar, else max id + 1)");
}

void add_graph_options(CLI::App* cmd, GraphOptions& g)
{
  add_input_options(cmd, g, false);
  cmd->add_option("--scale", g.scale, "Generate a Kronecker graph with 2^scale vertices");
  cmd->add_option("--edgefactor", g.edgefactor, "Edges per vertex for generation");
  cmd->add_option("--graph-seed", g.graph_seed, "Generator seed (default: --seed)")->each([&g](const std::string&) {
    g.graph_seed_set = true;
  });
  cmd->add_option("--initiator", g.initiator, "A,B,C,D quadrant probabilities");
}

void add_bfs_options(CLI::App* cmd, BfsOptions& b)
{
  cmd->add_option("--mode", b.mode, "sequential | level_sync | hybrid | hybrid_balanced | hybrid_reduced");
  cmd->add_option("--alpha", b.alpha, "Top-down to bottom-up threshold");
  cmd->add_option("--beta", b.beta, "Bottom-up to top-down threshold");
  cmd->add_option("--lambda", b.lambda, "Partition factor (default: 10 below scale 26, else 20)");
  cmd->add_option("--threads", b.threads, "Worker threads");
  cmd->add_option("--rounds", b.rounds, "Number of random sources");
  cmd->add_option("--seed", b.seed, "Seed for source selection (and generation)");
  cmd->add_option("--reorder", b.reorder, "none | rcm | partial:<p>");
  cmd->add_flag("--no-validate", b.no_validate, "Skip per-round validation");
}

std::optional<vertex_t> vertices_of(const GraphOptions& g)
{
  return g.vertices ? std::optional<vertex_t>(g.vertices) : std::nullopt;
}

EdgeFormat format_of(const GraphOptions& g)
{
  return g.format.empty() ? guess_edge_format(g.input) : parse_edge_format(g.format);
}

/// Vertex count from --vertices or the sidecar, if any.
std::optional<vertex_t> declared_vertices(const GraphOptions& g)
{
  if (auto v = vertices_of(g))
    return v;
  const auto meta_path = sidecar_path(g.input);
  if (std::filesystem::exists(meta_path)) {
    const auto meta = read_metadata(meta_path);
    if (auto it = meta.find("vertices"); it != meta.end())
      return static_cast<vertex_t>(std::stoul(it->second));
  }
  return std::nullopt;
}

EdgeList load_edges(const GraphOptions& g)
{
  return read_edges(g.input, format_of(g), declared_vertices(g));
}

GraphSource graph_source(const GraphOptions& g, const BfsOptions& b)
{
  GraphSource src;
  if (!g.input.empty() && g.scale != 0)
    throw ParameterError("give either --input or --scale, not both");
  if (!g.input.empty()) {
    src.input = g.input;
    if (!g.format.empty())
      src.format = parse_edge_format(g.format);
    src.vertices = vertices_of(g);
  } else if (g.scale != 0) {
    KroneckerParams p;
    p.scale = g.scale;
    p.edgefactor = g.edgefactor;
    p.seed = g.graph_seed_set ? g.graph_seed : b.seed;
    p.initiator = parse_initiator(g.initiator);
    p.validate();
    src.generate = p;
  } else {
    throw ParameterError("a graph is required: --input <file> or --scale <n>");
  }
  return src;
}

BfsParams bfs_params(const BfsOptions& b, const PreparedGraph& pg)
{
  BfsParams p;
  p.mode = parse_bfs_mode(b.mode);
  p.alpha = b.alpha;
  p.beta = b.beta;
  p.threads = b.threads;
  p.lambda = b.lambda != 0 ? b.lambda : default_lambda_for_scale(pg.scale.value_or(1));
  p.validate();
  return p;
}

std::ofstream open_out(const std::string& path)
{
  std::ofstream f(path, std::ios::trunc);
  if (!f)
    throw IoError(fmt::format("cannot open '{}' for writing", path));
  return f;
}

int cmd_generate(std::ostream& out, const GraphOptions& g, const std::string& format_name, unsigned threads,
                 std::uint64_t seed, const std::string& path)
{
  KroneckerParams p;
  p.scale = g.scale;
  p.edgefactor = g.edgefactor;
  p.seed = seed;
  p.initiator = parse_initiator(g.initiator);
  p.validate();
  const auto format = format_name.empty() ? guess_edge_format(path) : parse_edge_format(format_name);
  const auto list = kronecker_generate(p, threads);
  write_edges(path, format, list);
  const auto meta = kronecker_metadata(p, list, format);
  write_metadata(sidecar_path(path), meta);
  fmt::print(out, "wrote {} edge pairs over {} vertices to {} ({})\n", list.edges.size(), list.n_declared, path,
             to_string(format));
  return kSuccess;
}

int cmd_stats(std::ostream& out, const GraphOptions& g)
{
  const auto raw = load_edges(g);
  const auto graph = build_csr(raw);
  const auto report = graph_report(raw, graph);
  write_graph_report(out, report);
  const auto meta_path = sidecar_path(g.input);
  if (std::filesystem::exists(meta_path)) {
    const auto meta = read_metadata(meta_path);
    if (auto it = meta.find("isolated_vertices"); it != meta.end()) {
      const bool same = std::stoul(it->second) == report.isolated;
      fmt::print(out, "sidecar isolated    {} ({})\n", it->second, same ? "matches" : "DIFFERS");
    }
  }
  return kSuccess;
}

int cmd_reorder(std::ostream& out, const GraphOptions& g, double ratio, const std::string& perm_out,
                const std::string& graph_out, const std::string& out_format)
{
  const auto raw = load_edges(g);
  const auto graph = build_csr(raw);
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = ratio < 1.0 ? partial_rcm(graph, ratio) : rcm(graph);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto reordered = apply_permutation(graph, result.permutation);
  const auto bw_before = bandwidth(graph);
  const auto bw_after = bandwidth(reordered);

  Metadata meta{
    {"algorithm", std::string(kRcmAlgorithmVersion)},
    {"ratio", fmt::format("{}", ratio)},
    {"graph_hash", fmt::format("{:016x}", graph_fingerprint(graph))},
    {"vertices", std::to_string(graph.n())},
    {"non_isolated", std::to_string(result.stats.n_non_isolated)},
    {"relabeled", std::to_string(result.stats.relabeled)},
    {"components", std::to_string(result.stats.component_ranges.size())},
    {"largest_component_fraction", fmt::format("{:.6f}", result.stats.largest_component_fraction)},
    {"bandwidth_before", std::to_string(bw_before)},
    {"bandwidth_after", std::to_string(bw_after)},
    {"seconds", fmt::format("{:.6f}", secs)},
  };
  write_permutation(perm_out, result.permutation, meta);
  if (!graph_out.empty()) {
    const auto format = out_format.empty() ? guess_edge_format(graph_out) : parse_edge_format(out_format);
    write_edges(graph_out, format, relabel_edges(raw, result.permutation));
    write_metadata(sidecar_path(graph_out), {{"vertices", std::to_string(graph.n())},
                                             {"format", std::string(to_string(format))},
                                             {"permutation", perm_out}});
  }
  fmt::print(out, "reordered {} vertices ({} non-isolated, {} components) in {:.3f}s\n", graph.n(),
             result.stats.n_non_isolated, result.stats.component_ranges.size(), secs);
  fmt::print(out, "bandwidth {} -> {}\n", bw_before, bw_after);
  return kSuccess;
}

void describe_reorder(std::ostream& out, const PreparedGraph& pg)
{
  if (!pg.reorder)
    return;
  const auto& s = pg.reorder->stats;
  fmt::print(out, "reorder: {} of {} non-isolated vertices relabeled, {} components, largest fraction {:.6f}\n",
             s.relabeled, s.n_non_isolated, s.component_ranges.size(), s.largest_component_fraction);
}

int cmd_run(std::ostream& out, const GraphOptions& g, const BfsOptions& b, const std::string& summary_out,
            const std::string& rounds_csv, const std::string& trace_out, const std::string& pred_out)
{
  const auto reorder = ReorderSpec::parse(b.reorder);
  const bool need_desc = parse_bfs_mode(b.mode) == BfsMode::hybrid_reduced;
  const auto pg = prepare_graph(graph_source(g, b), reorder, need_desc, b.threads);
  const auto params = bfs_params(b, pg);
  const auto sources = choose_sources(pg, b.rounds, b.seed);

  RoundObserver observer;
  if (!pred_out.empty())
    observer = [&](unsigned round, vertex_t source, const BfsResult& r) {
      if (round != 0)
        return;
      // written in the original labeling so it validates against the input file
      const Permutation* perm = pg.reorder ? &pg.reorder->permutation : nullptr;
      std::vector<pred_t> pred(r.predecessor.size());
      for (vertex_t v = 0; v < pred.size(); ++v) {
        const vertex_t old = perm ? perm->old_id(v) : v;
        const pred_t p = r.predecessor[v];
        pred[old] = p == kNoPredecessor || !perm ? p : static_cast<pred_t>(perm->old_id(static_cast<vertex_t>(p)));
      }
      write_i64_array(pred_out, pred);
      write_metadata(sidecar_path(pred_out),
                     {{"source", std::to_string(perm ? perm->old_id(source) : source)},
                      {"vertices", std::to_string(pred.size())}});
    };

  const auto summary = run_rounds(pg, sources, params, !b.no_validate, observer);
  describe_reorder(out, pg);
  write_summary_text(out, summary, fmt::format("graph: {} vertices, {} undirected edges, reorder {}", pg.graph.n(),
                                               pg.graph.m_undirected(), reorder.to_string()));
  if (!summary_out.empty()) {
    auto f = open_out(summary_out);
    write_summary_text(f, summary);
  }
  if (!rounds_csv.empty()) {
    auto f = open_out(rounds_csv);
    write_rounds_csv(f, summary);
  }
  if (!trace_out.empty()) {
    auto f = open_out(trace_out);
    write_traces_csv(f, summary);
  }
  return kSuccess;
}

int cmd_sweep(std::ostream& out, const GraphOptions& g, const BfsOptions& b, const std::string& alpha_grid,
              const std::string& beta_grid, const std::string& lambda_grid, const std::string& csv_out)
{
  const auto reorder = ReorderSpec::parse(b.reorder);
  const bool need_desc = parse_bfs_mode(b.mode) == BfsMode::hybrid_reduced;
  const auto pg = prepare_graph(graph_source(g, b), reorder, need_desc, b.threads);
  const auto base = bfs_params(b, pg);
  const auto sources = choose_sources(pg, b.rounds, b.seed);
  SweepGrid grid{parse_grid(alpha_grid), parse_grid(beta_grid), parse_grid(lambda_grid)};
  for (const auto a : grid.alpha)
    BfsParams{a, base.beta, base.lambda, base.threads, base.mode}.validate();
  for (const auto x : grid.beta)
    BfsParams{base.alpha, x, base.lambda, base.threads, base.mode}.validate();
  for (const auto l : grid.lambda)
    BfsParams{base.alpha, base.beta, l, base.threads, base.mode}.validate();

  const auto result = run_sweep(pg, sources, base, grid, !b.no_validate);
  if (csv_out.empty()) {
    write_sweep_csv(out, result);
  } else {
    auto f = open_out(csv_out);
    write_sweep_csv(f, result);
  }
  const auto& best = result.points[result.best];
  fmt::print(out, "best: alpha {} beta {} lambda {} median TEPS {:.4e}\n", best.alpha, best.beta, best.lambda,
             best.teps.median);
  return kSuccess;
}

int cmd_validate(std::ostream& out, const GraphOptions& g, const std::string& pred_path, std::int64_t source_arg)
{
  const auto raw = load_edges(g);
  const auto graph = build_csr(raw);
  const auto pred = read_i64_array(pred_path);
  std::int64_t source = source_arg;
  if (source < 0) {
    const auto meta_path = sidecar_path(pred_path);
    if (!std::filesystem::exists(meta_path))
      throw ParameterError("--source is required when the predecessor file has no sidecar");
    source = std::stoll(read_metadata(meta_path).at("source"));
  }
  const auto report = validate(graph, raw.edges, static_cast<vertex_t>(source), pred);
  out << report.to_text();
  for (const auto& [k, v] : report.to_key_values())
    fmt::print(out, "{} = {}\n", k, v);
  return report.passed ? kSuccess : kValidationFailed;
}

bool mentions(const std::vector<std::string>& args, const std::string& flag)
{
  for (const auto& a : args)
    if (a == flag || a.starts_with(flag + "="))
      return true;
  return false;
}

} // namespace

std::vector<std::string> expand_config(const std::vector<std::string>& args)
{
  std::string config;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config = args[++i];
    } else if (args[i].starts_with("--config=")) {
      config = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config.empty())
    return rest;

  std::vector<std::string> extra;
  for (const auto& [key, value] : read_metadata(config)) {
    const auto flag = "--" + key;
    if (mentions(rest, flag))
      continue;
    if (value == "true")
      extra.push_back(flag);
    else if (value != "false")
      extra.push_back(flag + "=" + value);
  }
  // options belong to the subcommand, so they go after it
  const std::size_t at = std::min<std::size_t>(rest.size(), 2);
  rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(at), extra.begin(), extra.end());
  return rest;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Hybrid BFS with RCM reordering: generate, inspect, reorder and benchmark graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GraphOptions g;
  BfsOptions b;
  std::string format_name, out_path, perm_out, graph_out, out_format;
  std::string summary_out, rounds_csv, trace_out, pred_out;
  std::string alpha_grid, beta_grid, lambda_grid, csv_out, pred_path;
  unsigned gen_threads = 1;
  std::uint64_t gen_seed = 1;
  double ratio = 1.0;
  std::int64_t source = -1;

  auto* generate = app.add_subcommand("generate", "Write a Kronecker edge list and its metadata sidecar");
  generate->add_option("--scale", g.scale, "log2 of the vertex count")->required();
  generate->add_option("--edgefactor", g.edgefactor, "Edges per vertex");
  generate->add_option("--seed", gen_seed, "PRNG seed");
  generate->add_option("--initiator", g.initiator, "A,B,C,D quadrant probabilities");
  generate->add_option("--format", format_name, "binary | text (default: from extension)");
  generate->add_option("--threads", gen_threads, "Generator threads");
  generate->add_option("--out", out_path, "Output edge list")->required();

  auto* stats = app.add_subcommand("stats", "Print size, degree, bandwidth and component statistics");
  add_input_options(stats, g, true);

  auto* reorder = app.add_subcommand("reorder", "Compute an RCM or partial RCM permutation");
  add_input_options(reorder, g, true);
  reorder->add_option("--partial", ratio, "Relabel only this fraction of non-isolated vertices (0, 1]")
    ->check(CLI::Range(0.0, 1.0));
  reorder->add_option("--perm-out", perm_out, "Permutation file (u32 new -> original)")->required();
  reorder->add_option("--out", graph_out, "Also write the relabeled edge list");
  reorder->add_option("--out-format", out_format, "binary | text");

  auto* run_cmd = app.add_subcommand("run", "Benchmark BFS from random sources");
  add_graph_options(run_cmd, g);
  add_bfs_options(run_cmd, b);
  run_cmd->add_option("--summary-out", summary_out, "Write the text summary here too");
  run_cmd->add_option("--rounds-csv", rounds_csv, "Per-round CSV");
  run_cmd->add_option("--trace-out", trace_out, "Per-level counter trace CSV");
  run_cmd->add_option("--pred-out", pred_out, "Predecessor array of round 0 (i64, original ids)");

  auto* sweep = app.add_subcommand("sweep", "Grid search over alpha, beta and lambda");
  add_graph_options(sweep, g);
  add_bfs_options(sweep, b);
  sweep->add_option("--alpha-grid", alpha_grid, "Comma-separated alpha values");
  sweep->add_option("--beta-grid", beta_grid, "Comma-separated beta values");
  sweep->add_option("--lambda-grid", lambda_grid, "Comma-separated lambda values");
  sweep->add_option("--csv-out", csv_out, "Write the grid CSV here instead of stdout");

  auto* validate_cmd = app.add_subcommand("validate", "Check a predecessor array against a graph");
  add_input_options(validate_cmd, g, true);
  validate_cmd->add_option("--pred", pred_path, "Predecessor file (little-endian i64)")->required();
  validate_cmd->add_option("--source", source, "Source vertex (default: from the pred sidecar)");

  try {
    const auto args = expand_config(raw_args);
    std::vector<const char*> argv;
    for (const auto& a : args)
      argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (generate->parsed())
      return cmd_generate(out, g, format_name, gen_threads, gen_seed, out_path);
    if (stats->parsed())
      return cmd_stats(out, g);
    if (reorder->parsed())
      return cmd_reorder(out, g, ratio, perm_out, graph_out, out_format);
    if (run_cmd->parsed())
      return cmd_run(out, g, b, summary_out, rounds_csv, trace_out, pred_out);
    if (sweep->parsed())
      return cmd_sweep(out, g, b, alpha_grid, beta_grid, lambda_grid, csv_out);
    if (validate_cmd->parsed())
      return cmd_validate(out, g, pred_path, source);
    return kUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  } catch (const ValidationFailure& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kValidationFailed;
  } catch (const ParameterError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  } catch (const IoError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kIoError;
  } catch (const GraphError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kIoError;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kUsage;
  }
}

} // namespace rcmbfs::cli
