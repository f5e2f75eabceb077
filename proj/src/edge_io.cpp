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

#include "rcmbfs/edge_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fmt/format.h>
#include <fstream>
#include <istream>
#include <ostream>

namespace rcmbfs {

namespace {

template<typename T>
T to_little(T x) noexcept
{
  if constexpr (std::endian::native == std::endian::big) {
    T out{};
    auto* src = reinterpret_cast<const unsigned char*>(&x);
    auto* dst = reinterpret_cast<unsigned char*>(&out);
    for (std::size_t i = 0; i < sizeof(T); ++i)
      dst[i] = src[sizeof(T) - 1 - i];
    return out;
  }
  return x;
}

std::vector<char> slurp(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  in.seekg(0, std::ios::end);
  const auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  std::vector<char> bytes(size);
  if (size != 0 && !in.read(bytes.data(), static_cast<std::streamsize>(size)))
    throw IoError(fmt::format("short read on '{}'", path.string()));
  return bytes;
}

void spill(const std::filesystem::path& path, const void* data, std::size_t size)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out)
    throw IoError(fmt::format("write failed on '{}'", path.string()));
}

template<typename T>
std::vector<T> decode_array(const std::vector<char>& bytes, const std::filesystem::path& path)
{
  if (bytes.size() % sizeof(T) != 0)
    throw IoError(fmt::format("'{}': size {} is not a multiple of {}", path.string(), bytes.size(), sizeof(T)));
  std::vector<T> out(bytes.size() / sizeof(T));
  std::memcpy(out.data(), bytes.data(), bytes.size());
  for (auto& x : out)
    x = to_little(x);
  return out;
}

template<typename T>
void encode_array(const std::filesystem::path& path, std::span<const T> values)
{
  if constexpr (std::endian::native == std::endian::little) {
    spill(path, values.data(), values.size_bytes());
  } else {
    std::vector<T> tmp(values.begin(), values.end());
    for (auto& x : tmp)
      x = to_little(x);
    spill(path, tmp.data(), tmp.size() * sizeof(T));
  }
}

vertex_t settle_vertex_count(const std::vector<Edge>& edges, std::optional<vertex_t> n)
{
  if (n)
    return *n;
  vertex_t max_id = 0;
  for (const auto& e : edges)
    max_id = std::max({max_id, e.u, e.v});
  return edges.empty() ? 0 : max_id + 1;
}

std::string_view trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

EdgeFormat parse_edge_format(std::string_view name)
{
  if (name == "text" || name == "txt")
    return EdgeFormat::text;
  if (name == "binary" || name == "bin")
    return EdgeFormat::binary;
  throw ParameterError(fmt::format("unknown edge format '{}'", name));
}

std::string_view to_string(EdgeFormat f) noexcept
{
  return f == EdgeFormat::text ? "text" : "binary";
}

EdgeFormat guess_edge_format(const std::filesystem::path& path)
{
  const auto ext = path.extension().string();
  if (ext == ".txt" || ext == ".el" || ext == ".edges")
    return EdgeFormat::text;
  return EdgeFormat::binary;
}

EdgeList read_text_edges(std::istream& in, std::optional<vertex_t> n)
{
  EdgeList list;
  std::string line;
  std::size_t line_no = 0;
  auto parse_id = [&](std::string_view& rest) -> vertex_t {
    rest = trim(rest);
    vertex_t value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr == rest.data())
      throw IoError(fmt::format("line {}: expected a vertex id, got '{}'", line_no, std::string(rest)));
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return value;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim(line);
    if (rest.empty() || rest.front() == '#')
      continue;
    const vertex_t u = parse_id(rest);
    const vertex_t v = parse_id(rest);
    if (!trim(rest).empty())
      throw IoError(fmt::format("line {}: trailing characters '{}'", line_no, std::string(trim(rest))));
    if (n && (u >= *n || v >= *n))
      throw IoError(fmt::format("line {}: vertex id {} >= declared vertex count {}", line_no, std::max(u, v), *n));
    list.edges.push_back({u, v});
  }
  list.n_declared = settle_vertex_count(list.edges, n);
  return list;
}

EdgeList read_text_edges(const std::filesystem::path& path, std::optional<vertex_t> n)
{
  std::ifstream in(path);
  if (!in)
    throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  try {
    return read_text_edges(in, n);
  } catch (const IoError& e) {
    throw IoError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_text_edges(std::ostream& out, const EdgeList& list)
{
  fmt::memory_buffer buf;
  for (const auto& e : list.edges)
    fmt::format_to(std::back_inserter(buf), "{} {}\n", e.u, e.v);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_text_edges(const std::filesystem::path& path, const EdgeList& list)
{
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  write_text_edges(out, list);
  if (!out)
    throw IoError(fmt::format("write failed on '{}'", path.string()));
}

EdgeList read_binary_edges(const std::filesystem::path& path, std::optional<vertex_t> n)
{
  const auto bytes = slurp(path);
  if (bytes.size() % 8 != 0)
    throw IoError(fmt::format("'{}': byte offset {}: truncated edge record", path.string(), bytes.size() / 8 * 8));
  const auto ids = decode_array<std::uint32_t>(bytes, path);
  EdgeList list;
  list.edges.resize(ids.size() / 2);
  for (std::size_t i = 0; i < list.edges.size(); ++i) {
    list.edges[i] = {ids[2 * i], ids[2 * i + 1]};
    if (n && (list.edges[i].u >= *n || list.edges[i].v >= *n))
      throw IoError(fmt::format("'{}': byte offset {}: vertex id {} >= declared vertex count {}", path.string(), 8 * i,
                                std::max(list.edges[i].u, list.edges[i].v), *n));
  }
  list.n_declared = settle_vertex_count(list.edges, n);
  return list;
}

void write_binary_edges(const std::filesystem::path& path, const EdgeList& list)
{
  std::vector<std::uint32_t> ids(list.edges.size() * 2);
  for (std::size_t i = 0; i < list.edges.size(); ++i) {
    ids[2 * i] = list.edges[i].u;
    ids[2 * i + 1] = list.edges[i].v;
  }
  encode_array<std::uint32_t>(path, ids);
}

EdgeList read_edges(const std::filesystem::path& path, EdgeFormat format, std::optional<vertex_t> n)
{
  return format == EdgeFormat::text ? read_text_edges(path, n) : read_binary_edges(path, n);
}

void write_edges(const std::filesystem::path& path, EdgeFormat format, const EdgeList& list)
{
  if (format == EdgeFormat::text)
    write_text_edges(path, list);
  else
    write_binary_edges(path, list);
}

std::filesystem::path sidecar_path(const std::filesystem::path& path)
{
  auto p = path;
  p += ".meta";
  return p;
}

void write_metadata(const std::filesystem::path& path, const Metadata& meta)
{
  std::string text;
  for (const auto& [k, v] : meta)
    text += fmt::format("{} = {}\n", k, v);
  spill(path, text.data(), text.size());
}

std::map<std::string, std::string> parse_metadata(std::istream& in)
{
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw IoError(fmt::format("line {}: expected 'key = value'", line_no));
    out[std::string(trim(t.substr(0, eq)))] = std::string(trim(t.substr(eq + 1)));
  }
  return out;
}

std::map<std::string, std::string> read_metadata(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  return parse_metadata(in);
}

void write_u32_array(const std::filesystem::path& path, std::span<const std::uint32_t> values)
{
  encode_array<std::uint32_t>(path, values);
}

std::vector<std::uint32_t> read_u32_array(const std::filesystem::path& path)
{
  return decode_array<std::uint32_t>(slurp(path), path);
}

void write_i64_array(const std::filesystem::path& path, std::span<const std::int64_t> values)
{
  encode_array<std::int64_t>(path, values);
}

std::vector<std::int64_t> read_i64_array(const std::filesystem::path& path)
{
  return decode_array<std::int64_t>(slurp(path), path);
}

} // namespace rcmbfs
