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

#include "oracles.hpp"

#include "rcmbfs/edge_io.hpp"

#include <doctest.h>
#include <fstream>
#include <sstream>

using namespace rcmbfs;

TEST_CASE("text reader skips comments and blank lines and infers n")
{
  std::istringstream in("# a comment\n0 1\n\n  2 5\n# trailing\n3 3\n");
  const auto list = read_text_edges(in);
  CHECK(list.n_declared == 6);
  REQUIRE(list.edges.size() == 3);
  CHECK(list.edges[1] == Edge{2, 5});
}

TEST_CASE("text reader honors an explicit vertex count")
{
  std::istringstream in("0 1\n");
  CHECK(read_text_edges(in, 10).n_declared == 10);
  std::istringstream bad("0 12\n");
  CHECK_THROWS_AS((void)read_text_edges(bad, 10), IoError);
}

TEST_CASE("text parse errors carry the line number")
{
  std::istringstream in("0 1\n1 x\n");
  try {
    (void)read_text_edges(in);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream extra("0 1 2\n");
  CHECK_THROWS_AS((void)read_text_edges(extra), IoError);
}

TEST_CASE("binary and text files round trip to the same list")
{
  const auto dir = oracle::scratch_dir("edge-io");
  std::mt19937_64 rng(77);
  const auto list = oracle::random_edges(5000, 4000, rng);
  write_edges(dir / "g.bin", EdgeFormat::binary, list);
  write_edges(dir / "g.txt", EdgeFormat::text, list);
  CHECK(std::filesystem::file_size(dir / "g.bin") == 8 * list.edges.size());
  CHECK(read_edges(dir / "g.bin", EdgeFormat::binary, 5000) == list);
  CHECK(read_edges(dir / "g.txt", EdgeFormat::text, 5000) == list);
}

TEST_CASE("binary files are little-endian u32 pairs")
{
  const auto dir = oracle::scratch_dir("edge-io-le");
  write_binary_edges(dir / "g.bin", {300, {{1, 258}}});
  std::ifstream f(dir / "g.bin", std::ios::binary);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(bytes == std::vector<unsigned char>{1, 0, 0, 0, 2, 1, 0, 0});
}

TEST_CASE("truncated binary file is an I/O error")
{
  const auto dir = oracle::scratch_dir("edge-io-trunc");
  std::ofstream(dir / "bad.bin", std::ios::binary) << "abcdef";
  CHECK_THROWS_AS((void)read_binary_edges(dir / "bad.bin"), IoError);
  CHECK_THROWS_AS((void)read_binary_edges(dir / "missing.bin"), IoError);
}

TEST_CASE("format names and extension guessing")
{
  CHECK(parse_edge_format("text") == EdgeFormat::text);
  CHECK(parse_edge_format("binary") == EdgeFormat::binary);
  CHECK_THROWS_AS((void)parse_edge_format("csv"), ParameterError);
  CHECK(guess_edge_format("x/y.txt") == EdgeFormat::text);
  CHECK(guess_edge_format("x/y.el") == EdgeFormat::text);
  CHECK(guess_edge_format("x/y.bin") == EdgeFormat::binary);
}

TEST_CASE("metadata sidecars keep key order and parse back")
{
  const auto dir = oracle::scratch_dir("edge-io-meta");
  const auto path = sidecar_path(dir / "g.bin");
  CHECK(path.filename() == "g.bin.meta");
  write_metadata(path, {{"b", "2"}, {"a", "x y"}});
  std::ifstream f(path);
  std::string first;
  std::getline(f, first);
  CHECK(first == "b = 2");
  const auto meta = read_metadata(path);
  CHECK(meta.at("a") == "x y");
  CHECK(meta.at("b") == "2");
}

TEST_CASE("u32 and i64 arrays round trip")
{
  const auto dir = oracle::scratch_dir("edge-io-arrays");
  const std::vector<std::uint32_t> u{0, 1, 0xffffffffU, 7};
  const std::vector<std::int64_t> s{-1, 0, 5, std::int64_t{1} << 40};
  write_u32_array(dir / "u.bin", u);
  write_i64_array(dir / "s.bin", s);
  CHECK(read_u32_array(dir / "u.bin") == u);
  CHECK(read_i64_array(dir / "s.bin") == s);
}
