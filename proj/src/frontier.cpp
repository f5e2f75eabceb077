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

#include "rcmbfs/frontier.hpp"

#include <bit>
#include <cstring>
#include <omp.h>

namespace rcmbfs {

void Frontier::to_bitmap(unsigned threads)
{
  const auto blocks = bits_.block_count();
  const auto count = static_cast<std::int64_t>(queue_.size());
#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto tt = static_cast<std::size_t>(omp_get_num_threads());
    bits_.clear_blocks({blocks * tid / tt, blocks * (tid + 1) / tt});
#pragma omp barrier
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i)
      bits_.set_atomic(queue_[static_cast<std::size_t>(i)]);
  }
  form_ = Form::bitmap;
}

void Frontier::to_queue(unsigned threads)
{
  const auto words = bits_.words();
  std::vector<std::vector<vertex_t>> local(threads);
  std::vector<std::size_t> offset(threads + 1, 0);
#pragma omp parallel num_threads(threads)
  {
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
    const auto tt = static_cast<std::size_t>(omp_get_num_threads());
    auto& out = local[tid];
    const auto w_begin = words.size() * tid / tt;
    const auto w_end = words.size() * (tid + 1) / tt;
    for (auto w = w_begin; w < w_end; ++w) {
      auto bits = words[w];
      while (bits != 0) {
        out.push_back(static_cast<vertex_t>(w * Bitmap::kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    offset[tid + 1] = out.size();
#pragma omp barrier
#pragma omp single
    {
      for (std::size_t t = 0; t < threads; ++t)
        offset[t + 1] += offset[t];
      queue_.resize(offset[threads]);
    }
    if (!out.empty())
      std::memcpy(queue_.data() + offset[tid], out.data(), out.size() * sizeof(vertex_t));
  }
  form_ = Form::queue;
}

} // namespace rcmbfs
