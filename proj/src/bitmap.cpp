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

#include "rcmbfs/bitmap.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

namespace rcmbfs {

namespace {

// One cache line as a single vector value; the compiler lowers it to the
// widest SIMD registers the target offers.
using line_t = std::uint64_t __attribute__((vector_size(Bitmap::kBlockBytes)));

std::uint64_t* allocate_words(std::size_t n_words)
{
  if (n_words == 0)
    return nullptr;
  auto* p = static_cast<std::uint64_t*>(
    ::operator new(n_words * sizeof(std::uint64_t), std::align_val_t{Bitmap::kBlockBytes}));
  std::memset(p, 0, n_words * sizeof(std::uint64_t));
  return p;
}

} // namespace

void Bitmap::AlignedDelete::operator()(std::uint64_t* p) const noexcept
{
  ::operator delete(p, std::align_val_t{Bitmap::kBlockBytes});
}

Bitmap::Bitmap(std::size_t n_bits)
  : n_bits_(n_bits)
  , n_words_((n_bits + kBlockBits - 1) / kBlockBits * kBlockWords)
  , words_(allocate_words(n_words_))
{
}

Bitmap::Bitmap(const Bitmap& other)
  : n_bits_(other.n_bits_)
  , n_words_(other.n_words_)
  , words_(allocate_words(other.n_words_))
{
  if (n_words_ != 0)
    std::memcpy(words_.get(), other.words_.get(), storage_bytes());
}

Bitmap& Bitmap::operator=(const Bitmap& other)
{
  if (this != &other) {
    Bitmap copy(other);
    *this = std::move(copy);
  }
  return *this;
}

void Bitmap::clear() noexcept
{
  if (n_words_ != 0)
    std::memset(words_.get(), 0, storage_bytes());
}

void Bitmap::fill() noexcept
{
  if (n_words_ == 0)
    return;
  std::memset(words_.get(), 0xff, storage_bytes());
  mask_tail();
}

void Bitmap::mask_tail() noexcept
{
  const std::size_t full_words = n_bits_ / kWordBits;
  const std::size_t rem = n_bits_ % kWordBits;
  std::size_t w = full_words;
  if (rem != 0)
    words_[w++] &= (std::uint64_t{1} << rem) - 1;
  for (; w < n_words_; ++w)
    words_[w] = 0;
}

void Bitmap::clear_blocks(BlockRange range)
{
  if (range.last > block_count() || range.first > range.last)
    throw std::out_of_range("bitmap block range out of bounds");
  std::memset(words_.get() + range.first * kBlockWords, 0, range.size() * kBlockBytes);
}

std::size_t Bitmap::count() const noexcept
{
  std::size_t total = 0;
  for (std::size_t w = 0; w < n_words_; ++w)
    total += static_cast<std::size_t>(std::popcount(words_[w]));
  return total;
}

bool Bitmap::all_set(std::size_t begin, std::size_t end) const noexcept
{
  end = std::min(end, n_bits_);
  if (end <= begin)
    return true;
  std::size_t first_word = begin / kWordBits;
  const std::size_t last_word = (end - 1) / kWordBits;
  const std::uint64_t head_mask = ~std::uint64_t{0} << (begin % kWordBits);
  const std::size_t tail_bits = end % kWordBits;
  const std::uint64_t tail_mask = tail_bits == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail_bits) - 1;

  if (first_word == last_word) {
    const std::uint64_t mask = head_mask & tail_mask;
    return (words_[first_word] & mask) == mask;
  }
  if ((words_[first_word] & head_mask) != head_mask)
    return false;
  for (++first_word; first_word < last_word; ++first_word)
    if (words_[first_word] != ~std::uint64_t{0})
      return false;
  return (words_[last_word] & tail_mask) == tail_mask;
}

void Bitmap::check_compatible(const Bitmap& src, BlockRange range) const
{
  if (src.n_bits_ != n_bits_)
    throw std::invalid_argument("bitmap length mismatch: " + std::to_string(src.n_bits_) + " vs " +
                                std::to_string(n_bits_));
  if (range.first > range.last || range.last > block_count())
    throw std::out_of_range("bitmap block range out of bounds");
}

void Bitmap::or_blocks(const Bitmap& src, BlockRange range)
{
  check_compatible(src, range);
  if (&src == this)
    return;
  auto* dst_bytes = reinterpret_cast<unsigned char*>(words_.get());
  const auto* src_bytes = reinterpret_cast<const unsigned char*>(src.words_.get());
  for (std::size_t b = range.first; b < range.last; ++b) {
    line_t a;
    line_t c;
    std::memcpy(&a, dst_bytes + b * kBlockBytes, kBlockBytes);
    std::memcpy(&c, src_bytes + b * kBlockBytes, kBlockBytes);
    a |= c;
    std::memcpy(dst_bytes + b * kBlockBytes, &a, kBlockBytes);
  }
}

void Bitmap::copy_blocks(const Bitmap& src, BlockRange range)
{
  check_compatible(src, range);
  if (&src == this || range.size() == 0)
    return;
  std::memcpy(words_.get() + range.first * kBlockWords,
              src.words_.get() + range.first * kBlockWords,
              range.size() * kBlockBytes);
}

bool operator==(const Bitmap& a, const Bitmap& b) noexcept
{
  if (a.n_bits_ != b.n_bits_)
    return false;
  return a.n_words_ == 0 || std::memcmp(a.words_.get(), b.words_.get(), a.storage_bytes()) == 0;
}

} // namespace rcmbfs
