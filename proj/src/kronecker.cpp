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

#include "rcmbfs/kronecker.hpp"

#include "rcmbfs/graph_stats.hpp"

#include <cmath>
#include <fmt/format.h>
#include <omp.h>

namespace rcmbfs {

void KroneckerParams::validate() const
{
  if (scale < 1 || scale > 30)
    throw ParameterError(fmt::format("scale must be in [1, 30], got {}", scale));
  if (edgefactor < 1)
    throw ParameterError("edgefactor must be >= 1");
  double sum = 0;
  for (const double q : initiator) {
    if (!(q >= 0.0) || q > 1.0)
      throw ParameterError(fmt::format("initiator probability {} outside [0, 1]", q));
    sum += q;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw ParameterError(fmt::format("initiator sums to {}, expected 1", sum));
}

VertexScrambler::VertexScrambler(unsigned scale, std::uint64_t seed) noexcept
  : mask_((std::uint64_t{1} << scale) - 1)
{
  SplitMix64 rng(SplitMix64::mix(seed ^ 0x5c7a3b1de2f04a69ULL));
  for (int r = 0; r < 2; ++r) {
    mul_[r] = (rng.next() | 1U) & mask_;
    add_[r] = rng.next() & mask_;
  }
  shift_[0] = (scale + 1) / 2;
  shift_[1] = scale / 3 + 1;
}

vertex_t VertexScrambler::operator()(vertex_t v) const noexcept
{
  std::uint64_t x = v;
  for (int r = 0; r < 2; ++r) {
    x = (x * mul_[r] + add_[r]) & mask_;
    x ^= x >> shift_[r];
  }
  return static_cast<vertex_t>(x);
}

EdgeList kronecker_generate(const KroneckerParams& p, unsigned threads)
{
  p.validate();
  const unsigned scale = p.scale;
  const std::uint64_t m = p.edge_count();
  const double ab = p.initiator[0] + p.initiator[1];
  const double a = p.initiator[0];
  const double abc = ab + p.initiator[2];
  const std::uint64_t base = SplitMix64::mix(p.seed);
  const VertexScrambler scramble(scale, p.seed);

  EdgeList list;
  list.n_declared = p.vertex_count();
  list.edges.resize(m);

  const auto m_signed = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : 1)
  for (std::int64_t i = 0; i < m_signed; ++i) {
    SplitMix64 rng(base);
    rng.skip(static_cast<std::uint64_t>(i) * scale);
    vertex_t u = 0;
    vertex_t v = 0;
    for (unsigned level = 0; level < scale; ++level) {
      const double r = rng.next_unit();
      const vertex_t row = r >= ab ? 1 : 0;
      const vertex_t col = (r >= a && r < ab) || r >= abc ? 1 : 0;
      u = (u << 1) | row;
      v = (v << 1) | col;
    }
    list.edges[static_cast<std::size_t>(i)] = {scramble(u), scramble(v)};
  }
  return list;
}

Metadata kronecker_metadata(const KroneckerParams& p, const EdgeList& list, EdgeFormat format)
{
  const vertex_t isolated = count_isolated(list);
  return {
    {"generator", "kronecker"},
    {"format", std::string(to_string(format))},
    {"scale", std::to_string(p.scale)},
    {"edgefactor", std::to_string(p.edgefactor)},
    {"initiator", fmt::format("{},{},{},{}", p.initiator[0], p.initiator[1], p.initiator[2], p.initiator[3])},
    {"seed", std::to_string(p.seed)},
    {"prng", std::string(kGeneratorPrng)},
    {"scramble", std::string(kGeneratorScramble)},
    {"vertices", std::to_string(list.n_declared)},
    {"edges", std::to_string(list.edges.size())},
    {"isolated_vertices", std::to_string(isolated)},
    {"isolated_fraction", fmt::format("{:.6f}", list.n_declared ? double(isolated) / list.n_declared : 0.0)},
  };
}

} // namespace rcmbfs
