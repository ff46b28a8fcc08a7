#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace norminf {

/// Fixed-width bit vector over a lattice's pair index (bit i <=> pairs[i]).
///
/// Ordered as an unsigned integer whose bit i is pair i, so the highest
/// pair index is the most significant position.
class PairSet {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kCapacity = kWords * 64;

  constexpr PairSet() = default;

  static constexpr PairSet from_word(std::uint64_t low) {
    PairSet s;
    s.words_[0] = low;
    return s;
  }

  /// Lowest `count` bits set.
  static constexpr PairSet first_n(std::size_t count) {
    PairSet s;
    for (std::size_t w = 0; w < kWords && count > 0; ++w) {
      std::size_t take = count < 64 ? count : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      count -= take;
    }
    return s;
  }

  constexpr bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  constexpr void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  constexpr std::uint64_t word(std::size_t w) const { return words_[w]; }
  constexpr void set_word(std::size_t w, std::uint64_t v) { words_[w] = v; }

  constexpr std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  constexpr bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  constexpr bool is_subset_of(const PairSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  /// Calls f(index) for each set bit in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  constexpr PairSet& operator&=(const PairSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr PairSet& operator|=(const PairSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend constexpr PairSet operator&(PairSet a, const PairSet& b) { return a &= b; }
  friend constexpr PairSet operator|(PairSet a, const PairSet& b) { return a |= b; }

  friend constexpr bool operator==(const PairSet&, const PairSet&) = default;
  friend constexpr std::strong_ordering operator<=>(const PairSet& a, const PairSet& b) {
    for (std::size_t w = kWords; w-- > 0;) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace norminf
