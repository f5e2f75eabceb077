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

#include "rcmbfs/bfs_types.hpp"
#include "rcmbfs/csr_graph.hpp"
#include "rcmbfs/edge_io.hpp"
#include "rcmbfs/graph_stats.hpp"
#include "rcmbfs/kronecker.hpp"
#include "rcmbfs/reorder.hpp"
#include "rcmbfs/validator.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rcmbfs {

struct ReorderSpec
{
  enum class Kind
  {
    none,
    rcm,
    partial,
  };

  Kind kind = Kind::none;
  double ratio = 1.0;

  /// "none", "rcm" or "partial:<p>" with p in (0, 1].
  [[nodiscard]] static ReorderSpec parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
};

struct GraphSource
{
  std::optional<KroneckerParams> generate;
  std::filesystem::path input;
  std::optional<EdgeFormat> format;
  std::optional<vertex_t> vertices;
};

struct RunConfig
{
  GraphSource source;
  ReorderSpec reorder;
  BfsParams bfs;
  unsigned rounds = 64;
  std::uint64_t seed = 1;
  bool validate = true;
  std::filesystem::path summary_out;
  std::filesystem::path rounds_csv_out;
  std::filesystem::path trace_out;
};

struct PreprocessTimes
{
  double load = 0.0;
  double generation = 0.0;
  double csr_build = 0.0;
  double reorder = 0.0;
  double degree_sort = 0.0;
};

/// Everything a batch of traversals needs, in the traversal id space.
struct PreparedGraph
{
  EdgeList raw;
  CsrGraph graph;
  std::optional<CsrGraph> descending;
  std::optional<RcmResult> reorder;
  PreprocessTimes times;
  std::optional<unsigned> scale;
};

[[nodiscard]] PreparedGraph prepare_graph(const GraphSource& source, const ReorderSpec& reorder, bool need_descending,
                                          unsigned threads = 1);

/// Seeded sample without replacement from the non-isolated vertices of the
/// original labeling, returned in traversal ids. Identical picks for any
/// reorder spec. Rounds beyond |V+| are clamped.
[[nodiscard]] std::vector<vertex_t> choose_sources(const PreparedGraph& pg, unsigned rounds, std::uint64_t seed);

struct TepsStats
{
  double min = 0.0;
  double max = 0.0;
  double median = 0.0;
  double harmonic_mean = 0.0;
};

[[nodiscard]] TepsStats teps_stats(std::span<const double> teps);

struct RoundRecord
{
  unsigned round = 0;
  vertex_t source = 0;
  std::uint64_t traversed_edges = 0;
  /// Raw input pairs inside the reached component, duplicates and loops included.
  std::uint64_t traversed_edges_raw = 0;
  std::uint64_t reached = 0;
  std::size_t levels = 0;
  double seconds = 0.0;
  double teps = 0.0;
  bool validated = false;
};

struct LevelAggregate
{
  std::size_t level = 0;
  std::size_t rounds = 0;
  std::size_t top_down = 0;
  std::size_t bottom_up = 0;
  double mean_frontier = 0.0;
  double mean_scanned = 0.0;
  double mean_partition_total = 0.0;
  double mean_seconds = 0.0;
};

struct BenchSummary
{
  BfsParams params;
  std::vector<RoundRecord> rounds;
  TepsStats teps;
  std::vector<LevelAggregate> levels;
  std::vector<std::vector<LevelRecord>> traces;
  PreprocessTimes times;
  /// FNV-1a over the derived level arrays of all rounds (validated runs only).
  std::uint64_t level_checksum = 0;
};

class ValidationFailure : public Error
{
public:
  ValidationFailure(ValidationReport report, unsigned round, vertex_t source);

  [[nodiscard]] const ValidationReport& report() const noexcept { return report_; }
  [[nodiscard]] unsigned round() const noexcept { return round_; }
  [[nodiscard]] vertex_t source() const noexcept { return source_; }

private:
  ValidationReport report_;
  unsigned round_;
  vertex_t source_;
};

using RoundObserver = std::function<void(unsigned round, vertex_t source, const BfsResult&)>;

/// Runs one traversal per source. Throws ValidationFailure on the first
/// invalid tree when `validate` is set.
[[nodiscard]] BenchSummary run_rounds(const PreparedGraph& pg, std::span<const vertex_t> sources,
                                      const BfsParams& params, bool validate, const RoundObserver& observer = {});

void write_summary_text(std::ostream& out, const BenchSummary& s, std::string_view title = {});
void write_rounds_csv(std::ostream& out, const BenchSummary& s);
void write_traces_csv(std::ostream& out, const BenchSummary& s);

struct SweepGrid
{
  std::vector<unsigned> alpha;
  std::vector<unsigned> beta;
  std::vector<unsigned> lambda;
};

struct SweepPoint
{
  unsigned alpha = 0;
  unsigned beta = 0;
  unsigned lambda = 0;
  TepsStats teps;
  std::uint64_t level_checksum = 0;
};

struct SweepResult
{
  std::vector<SweepPoint> points;
  std::size_t best = 0;
};

/// One batch of rounds per grid point over shared graph and sources.
[[nodiscard]] SweepResult run_sweep(const PreparedGraph& pg, std::span<const vertex_t> sources,
                                    const BfsParams& base, const SweepGrid& grid, bool validate);
void write_sweep_csv(std::ostream& out, const SweepResult& r);

struct GraphReport
{
  vertex_t n = 0;
  std::uint64_t raw_edges = 0;
  std::uint64_t undirected_edges = 0;
  vertex_t isolated = 0;
  vertex_t non_isolated = 0;
  DegreeProfile degrees;
  std::uint64_t bandwidth = 0;
  std::size_t components = 0;
  std::vector<vertex_t> largest_components;
  double largest_component_fraction = 0.0;
  std::uint64_t fingerprint = 0;
};

[[nodiscard]] GraphReport graph_report(const EdgeList& raw, const CsrGraph& g);
void write_graph_report(std::ostream& out, const GraphReport& r);

} // namespace rcmbfs
