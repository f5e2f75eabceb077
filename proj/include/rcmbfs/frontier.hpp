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

#include "rcmbfs/bitmap.hpp"
#include "rcmbfs/types.hpp"

#include <vector>

namespace rcmbfs {

/// A BFS frontier kept either as a vertex queue (top-down) or a bitmap
/// (bottom-up). After a conversion both forms hold the same set.
class Frontier
{
public:
  enum class Form
  {
    queue,
    bitmap,
  };

  Frontier() = default;
  explicit Frontier(vertex_t n)
    : bits_(n)
  {
  }

  [[nodiscard]] Form form() const noexcept { return form_; }
  [[nodiscard]] std::vector<vertex_t>& queue() noexcept { return queue_; }
  [[nodiscard]] const std::vector<vertex_t>& queue() const noexcept { return queue_; }
  [[nodiscard]] Bitmap& bits() noexcept { return bits_; }
  [[nodiscard]] const Bitmap& bits() const noexcept { return bits_; }

  void mark(Form f) noexcept { form_ = f; }

  void reset(vertex_t source)
  {
    queue_.assign(1, source);
    form_ = Form::queue;
  }

  /// Rebuilds the bitmap from the queue.
  void to_bitmap(unsigned threads);
  /// Rebuilds the queue (ascending ids) from the bitmap.
  void to_queue(unsigned threads);

private:
  Form form_ = Form::queue;
  std::vector<vertex_t> queue_;
  Bitmap bits_;
};

} // namespace rcmbfs
