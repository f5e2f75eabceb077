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

#include <atomic>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>

namespace rcmbfs {

/**
 * Bit array split into cache-line sized blocks.
 *
 * Storage is 64-byte aligned and always a whole number of 512-bit blocks.
 * Bits at positions >= size() are kept zero by every operation. Single-bit
 * atomic operations may run concurrently on any bits; the bulk block
 * operations require the caller to own the touched blocks exclusively.
 */
class Bitmap
{
public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kBlockBytes = 64;
  static constexpr std::size_t kBlockBits = kBlockBytes * 8;
  static constexpr std::size_t kBlockWords = kBlockBits / kWordBits;

  /// Half-open range of block indices.
  struct BlockRange
  {
    std::size_t first = 0;
    std::size_t last = 0;

    [[nodiscard]] std::size_t size() const noexcept { return last > first ? last - first : 0; }
  };

  Bitmap() = default;
  explicit Bitmap(std::size_t n_bits);

  Bitmap(const Bitmap& other);
  Bitmap& operator=(const Bitmap& other);
  Bitmap(Bitmap&&) noexcept = default;
  Bitmap& operator=(Bitmap&&) noexcept = default;

  [[nodiscard]] std::size_t size() const noexcept { return n_bits_; }
  [[nodiscard]] std::size_t block_count() const noexcept { return n_words_ / kBlockWords; }
  [[nodiscard]] std::size_t word_count() const noexcept { return n_words_; }
  [[nodiscard]] std::size_t storage_bytes() const noexcept { return n_words_ * sizeof(std::uint64_t); }
  [[nodiscard]] BlockRange all_blocks() const noexcept { return {0, block_count()}; }

  [[nodiscard]] std::span<std::uint64_t> words() noexcept { return {words_.get(), n_words_}; }
  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return {words_.get(), n_words_}; }
  [[nodiscard]] const std::uint64_t* data() const noexcept { return words_.get(); }

  [[nodiscard]] bool test(std::size_t i) const noexcept
  {
    assert(i < n_bits_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }

  /// Plain write; the caller owns the word holding bit i.
  void set(std::size_t i) noexcept
  {
    assert(i < n_bits_);
    words_[i / kWordBits] |= bit(i);
  }

  void reset(std::size_t i) noexcept
  {
    assert(i < n_bits_);
    words_[i / kWordBits] &= ~bit(i);
  }

  [[nodiscard]] bool test_atomic(std::size_t i) const noexcept
  {
    assert(i < n_bits_);
    std::atomic_ref<std::uint64_t> word(words_[i / kWordBits]);
    return (word.load(std::memory_order_relaxed) >> (i % kWordBits)) & 1U;
  }

  /// Sets bit i and returns its previous value, atomically.
  bool test_and_set(std::size_t i) noexcept
  {
    assert(i < n_bits_);
    std::atomic_ref<std::uint64_t> word(words_[i / kWordBits]);
    return (word.fetch_or(bit(i), std::memory_order_acq_rel) & bit(i)) != 0;
  }

  void set_atomic(std::size_t i) noexcept { (void)test_and_set(i); }

  void clear() noexcept;
  void fill() noexcept;
  void clear_blocks(BlockRange range);

  [[nodiscard]] std::size_t count() const noexcept;

  /// True when every bit in [begin, end) is set. Word-at-a-time.
  [[nodiscard]] bool all_set(std::size_t begin, std::size_t end) const noexcept;

  /// this |= src over the blocks in range.
  void or_blocks(const Bitmap& src, BlockRange range);
  /// this = src over the blocks in range.
  void copy_blocks(const Bitmap& src, BlockRange range);

  /// Blocks touched by bit interval [begin_bit, end_bit).
  [[nodiscard]] static BlockRange blocks_of(std::size_t begin_bit, std::size_t end_bit) noexcept
  {
    if (end_bit <= begin_bit)
      return {begin_bit / kBlockBits, begin_bit / kBlockBits};
    return {begin_bit / kBlockBits, (end_bit + kBlockBits - 1) / kBlockBits};
  }

  friend bool operator==(const Bitmap& a, const Bitmap& b) noexcept;

private:
  struct AlignedDelete
  {
    void operator()(std::uint64_t* p) const noexcept;
  };

  static constexpr std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i % kWordBits); }

  void check_compatible(const Bitmap& src, BlockRange range) const;
  void mask_tail() noexcept;

  std::size_t n_bits_ = 0;
  std::size_t n_words_ = 0;
  std::unique_ptr<std::uint64_t[], AlignedDelete> words_;
};

} // namespace rcmbfs
