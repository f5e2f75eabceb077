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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcmbfs {

/// 32-bit vertex ids are enough for graphs up to scale 30.
using vertex_t = std::uint32_t;
using edge_index_t = std::uint64_t;

/// Predecessor entry; -1 marks an unreached vertex.
using pred_t = std::int64_t;
inline constexpr pred_t kNoPredecessor = -1;

struct Edge
{
  vertex_t u = 0;
  vertex_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Half-open vertex interval [begin, end).
struct VertexRange
{
  vertex_t begin = 0;
  vertex_t end = 0;

  [[nodiscard]] constexpr vertex_t size() const noexcept { return end > begin ? end - begin : 0; }
  [[nodiscard]] constexpr bool empty() const noexcept { return end <= begin; }
  [[nodiscard]] constexpr bool contains(vertex_t v) const noexcept { return v >= begin && v < end; }

  friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input (bad endpoint, inconsistent offsets).
class GraphError : public Error
{
public:
  using Error::Error;
};

/// Out-of-range algorithm or generator parameter.
class ParameterError : public Error
{
public:
  using Error::Error;
};

/// File access or parse failure.
class IoError : public Error
{
public:
  using Error::Error;
};

} // namespace rcmbfs
