#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace linram {

/**
 * Fixed-capacity bit set of `Words` machine words. Graph rows are stored as
 * these; one word covers every graph the enumeration engine touches.
 */
template <std::size_t Words>
class BitSet {
 public:
  static constexpr std::size_t words = Words;
  static constexpr int capacity = static_cast<int>(64 * Words);

  constexpr BitSet() = default;

  static constexpr BitSet from_word(std::uint64_t w) {
    BitSet s;
    s.words_[0] = w;
    return s;
  }

  /// Bits [0, n).
  static constexpr BitSet prefix(int n) {
    BitSet s;
    for (std::size_t i = 0; i < Words && n > 0; ++i, n -= 64)
      s.words_[i] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr void assign(int i, bool value) { value ? set(i) : reset(i); }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  constexpr bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  constexpr bool none() const { return !any(); }

  /// Lowest set bit, or -1.
  constexpr int first() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i]) return static_cast<int>(64 * i) + std::countr_zero(words_[i]);
    return -1;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(64 * i) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  constexpr bool is_subset_of(const BitSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }
  constexpr std::uint64_t& word(std::size_t i) { return words_[i]; }

  constexpr BitSet& operator&=(const BitSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr BitSet& operator|=(const BitSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr BitSet& operator^=(const BitSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// this & ~o
  constexpr BitSet& subtract(const BitSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend constexpr BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
  friend constexpr BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend constexpr BitSet operator^(BitSet a, const BitSet& b) { return a ^= b; }
  friend constexpr BitSet operator-(BitSet a, const BitSet& b) { return a.subtract(b); }

  constexpr bool operator==(const BitSet&) const = default;
  constexpr auto operator<=>(const BitSet&) const = default;

 private:
  std::array<std::uint64_t, Words> words_{};
};

}  // namespace linram
