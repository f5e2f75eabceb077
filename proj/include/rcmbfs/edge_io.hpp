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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rcmbfs {

enum class EdgeFormat
{
  text,
  binary,
};

[[nodiscard]] EdgeFormat parse_edge_format(std::string_view name);
[[nodiscard]] std::string_view to_string(EdgeFormat f) noexcept;

/// Guesses from the extension: ".txt", ".el", ".edges" are text, anything else binary.
[[nodiscard]] EdgeFormat guess_edge_format(const std::filesystem::path& path);

// Text: one "u v" pair per line, '#' comment lines and blank lines skipped.
// When n is not supplied it is inferred as max id + 1.
[[nodiscard]] EdgeList read_text_edges(std::istream& in, std::optional<vertex_t> n = std::nullopt);
[[nodiscard]] EdgeList read_text_edges(const std::filesystem::path& path, std::optional<vertex_t> n = std::nullopt);
void write_text_edges(std::ostream& out, const EdgeList& list);
void write_text_edges(const std::filesystem::path& path, const EdgeList& list);

// Binary: little-endian u32 pairs, no header.
[[nodiscard]] EdgeList read_binary_edges(const std::filesystem::path& path, std::optional<vertex_t> n = std::nullopt);
void write_binary_edges(const std::filesystem::path& path, const EdgeList& list);

[[nodiscard]] EdgeList read_edges(const std::filesystem::path& path, EdgeFormat format,
                                  std::optional<vertex_t> n = std::nullopt);
void write_edges(const std::filesystem::path& path, EdgeFormat format, const EdgeList& list);

/// Ordered "key = value" records of a sidecar file.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Sidecar path convention: "<file>.meta".
[[nodiscard]] std::filesystem::path sidecar_path(const std::filesystem::path& path);

void write_metadata(const std::filesystem::path& path, const Metadata& meta);
[[nodiscard]] std::map<std::string, std::string> read_metadata(const std::filesystem::path& path);
[[nodiscard]] std::map<std::string, std::string> parse_metadata(std::istream& in);

void write_u32_array(const std::filesystem::path& path, std::span<const std::uint32_t> values);
[[nodiscard]] std::vector<std::uint32_t> read_u32_array(const std::filesystem::path& path);
void write_i64_array(const std::filesystem::path& path, std::span<const std::int64_t> values);
[[nodiscard]] std::vector<std::int64_t> read_i64_array(const std::filesystem::path& path);

} // namespace rcmbfs
