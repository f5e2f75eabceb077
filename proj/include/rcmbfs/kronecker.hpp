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

#include "rcmbfs/csr_graph.hpp"
#include "rcmbfs/edge_io.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace rcmbfs {

struct KroneckerParams
{
  unsigned scale = 16;
  unsigned edgefactor = 16;
  /// Quadrant probabilities (A, B, C, D).
  std::array<double, 4> initiator{0.57, 0.19, 0.19, 0.05};
  std::uint64_t seed = 1;

  [[nodiscard]] vertex_t vertex_count() const noexcept { return vertex_t{1} << scale; }
  [[nodiscard]] std::uint64_t edge_count() const noexcept
  {
    return (std::uint64_t{1} << scale) * edgefactor;
  }

  /// Throws ParameterError unless 1 <= scale <= 30, edgefactor >= 1 and the
  /// initiator is a probability vector (sum within 1e-9 of 1).
  void validate() const;
};

/// Name recorded in metadata sidecars for reproducibility.
inline constexpr std::string_view kGeneratorPrng = "splitmix64 (single stream, edge i draws outputs [i*scale, (i+1)*scale))";
inline constexpr std::string_view kGeneratorScramble = "affine-xorshift-2round (mod 2^scale)";

/// SplitMix64 with O(1) jump-ahead.
class SplitMix64
{
public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(std::uint64_t state) noexcept
    : state_(state)
  {
  }

  std::uint64_t next() noexcept
  {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  void skip(std::uint64_t n) noexcept { state_ += n * kGamma; }

  static std::uint64_t mix(std::uint64_t z) noexcept
  {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/// Seeded bijection on [0, 2^scale) used to hide structure in vertex ids.
class VertexScrambler
{
public:
  VertexScrambler(unsigned scale, std::uint64_t seed) noexcept;

  [[nodiscard]] vertex_t operator()(vertex_t x) const noexcept;

private:
  std::uint64_t mask_;
  std::uint64_t mul_[2];
  std::uint64_t add_[2];
  unsigned shift_[2];
};

/**
 * R-MAT style Kronecker edge generation.
 *
 * Emits exactly 2^scale * edgefactor raw pairs, including any self-loops
 * and duplicates the sampling produces. Edge i depends only on (params, i),
 * so the output is identical for every thread count.
 */
[[nodiscard]] EdgeList kronecker_generate(const KroneckerParams& p, unsigned threads = 1);

/// Sidecar content describing a generated list.
[[nodiscard]] Metadata kronecker_metadata(const KroneckerParams& p, const EdgeList& list, EdgeFormat format);

} // namespace rcmbfs
