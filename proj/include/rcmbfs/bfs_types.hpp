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

#include "rcmbfs/types.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace rcmbfs {

enum class Direction : std::uint8_t
{
  top_down,
  bottom_up,
};

enum class BfsMode : std::uint8_t
{
  sequential,      ///< textbook queue BFS, the reference oracle
  level_sync,      ///< parallel top-down at every level
  hybrid,          ///< direction-optimizing, static bottom-up scheduling
  hybrid_balanced, ///< + striped top-down and work-stealing bottom-up
  hybrid_reduced,  ///< + degree-aware two-pass bottom-up with partition shrinking
};

[[nodiscard]] std::string_view to_string(Direction d) noexcept;
[[nodiscard]] std::string_view to_string(BfsMode m) noexcept;
/// Throws ParameterError for unknown names.
[[nodiscard]] BfsMode parse_bfs_mode(std::string_view name);

struct BfsParams
{
  /// Top-down -> bottom-up when m_f > m_u / alpha.
  unsigned alpha = 64;
  /// Bottom-up -> top-down when n_f < n / beta.
  unsigned beta = 8;
  /// Partition factor: lambda * threads work-stealing partitions.
  unsigned lambda = 20;
  unsigned threads = 1;
  BfsMode mode = BfsMode::hybrid_reduced;
  /// Keep a copy of the live partition bounds after every bottom-up step.
  bool record_partitions = false;

  /// alpha in [1, 128], beta in [1, 32], lambda >= 1, threads >= 1.
  void validate() const;
};

/// Partition factor suggested for a graph of the given scale.
[[nodiscard]] constexpr unsigned default_lambda_for_scale(unsigned scale) noexcept
{
  return scale < 26 ? 10 : 20;
}

struct LevelRecord
{
  Direction direction = Direction::top_down;
  std::uint64_t frontier_size = 0;    ///< n_f of the frontier being expanded
  std::uint64_t frontier_edges = 0;   ///< m_f: degree sum of that frontier
  std::uint64_t unexplored_edges = 0; ///< m_u: degree sum of unvisited vertices
  std::uint64_t scanned_edges = 0;    ///< adjacency entries examined
  std::uint64_t discovered = 0;
  std::uint64_t first_pass_found = 0; ///< two-pass kernel: parents found at the hub
  std::uint64_t partition_total = 0;  ///< live partition size after the first shrink
  /// Adjacency entries assigned per thread; striped top-down levels only.
  std::vector<std::uint64_t> thread_edges;
  double seconds = 0.0;
};

struct BfsResult
{
  std::vector<pred_t> predecessor;
  std::vector<LevelRecord> levels;
  double elapsed_seconds = 0.0;
  /// Undirected edges inside the reached component.
  std::uint64_t traversed_edges = 0;
  std::uint64_t reached = 0;
  /// Live bounds after each bottom-up step, if requested.
  std::vector<std::vector<VertexRange>> partition_history;
};

} // namespace rcmbfs
