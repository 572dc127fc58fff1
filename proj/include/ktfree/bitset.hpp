#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>

namespace ktfree {

#ifndef KTFREE_MAX_VERTICES
#define KTFREE_MAX_VERTICES 128
#endif

/// Hard cap on graph order; fixed at compile time so set operations stay word-parallel.
inline constexpr std::size_t kMaxVertices = KTFREE_MAX_VERTICES;

static_assert(kMaxVertices > 0 && kMaxVertices % 64 == 0, "vertex cap must be a positive multiple of 64");

/// Fixed-width bit set over vertex indices [0, Bits).
template <std::size_t Bits>
class BitSet {
 public:
  static constexpr std::size_t kWords = Bits / 64;
  using Word = std::uint64_t;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    Iterator() = default;
    Iterator(const BitSet* set, std::size_t word) : set_(set), word_(word) { advance_to_set_word(); }

    std::size_t operator*() const { return word_ * 64 + static_cast<std::size_t>(std::countr_zero(bits_)); }

    Iterator& operator++() {
      bits_ &= bits_ - 1;
      if (bits_ == 0) {
        ++word_;
        advance_to_set_word();
      }
      return *this;
    }

    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }

    bool operator==(const Iterator& other) const { return word_ == other.word_ && bits_ == other.bits_; }

   private:
    void advance_to_set_word() {
      while (word_ < kWords && set_->words_[word_] == 0) ++word_;
      bits_ = word_ < kWords ? set_->words_[word_] : 0;
    }

    const BitSet* set_ = nullptr;
    std::size_t word_ = kWords;
    Word bits_ = 0;
  };

  constexpr BitSet() = default;

  /// The set {0, ..., count-1}.
  static BitSet prefix(std::size_t count) {
    BitSet s;
    for (std::size_t w = 0; w < kWords && count > 0; ++w) {
      if (count >= 64) {
        s.words_[w] = ~Word{0};
        count -= 64;
      } else {
        s.words_[w] = (Word{1} << count) - 1;
        count = 0;
      }
    }
    return s;
  }

  static BitSet singleton(std::size_t v) {
    BitSet s;
    s.set(v);
    return s;
  }

  static constexpr std::size_t capacity() { return Bits; }

  void set(std::size_t v) { words_[v / 64] |= Word{1} << (v % 64); }
  void reset(std::size_t v) { words_[v / 64] &= ~(Word{1} << (v % 64)); }
  bool test(std::size_t v) const { return (words_[v / 64] >> (v % 64)) & 1U; }
  void clear() { words_.fill(0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (Word w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Lowest element, or capacity() when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return Bits;
  }

  /// Highest element, or capacity() when empty.
  std::size_t last() const {
    for (std::size_t w = kWords; w-- > 0;)
      if (words_[w] != 0) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
    return Bits;
  }

  bool is_subset_of(const BitSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  bool intersects(const BitSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  BitSet& operator&=(const BitSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  BitSet& operator^=(const BitSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  BitSet& operator-=(const BitSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator^(BitSet a, const BitSet& b) { return a ^= b; }
  friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

  bool operator==(const BitSet&) const = default;
  auto operator<=>(const BitSet&) const = default;

  Iterator begin() const { return Iterator(this, 0); }
  Iterator end() const { return Iterator(this, kWords); }

  const std::array<Word, kWords>& words() const { return words_; }

 private:
  std::array<Word, kWords> words_{};
};

using VertexSet = BitSet<kMaxVertices>;

}  // namespace ktfree

template <std::size_t Bits>
struct std::hash<ktfree::BitSet<Bits>> {
  std::size_t operator()(const ktfree::BitSet<Bits>& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : s.words()) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }
};
