#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace kdis::detail {

/// Fixed-width bitset over W machine words. W=1 compiles to plain word ops.
template <std::size_t W>
struct FixedBits {
  std::array<std::uint64_t, W> w{};

  static FixedBits from_span(std::span<const std::uint64_t> words) {
    FixedBits b;
    for (std::size_t i = 0; i < W && i < words.size(); ++i) b.w[i] = words[i];
    return b;
  }
  static FixedBits prefix(std::size_t n) {
    FixedBits b;
    for (std::size_t i = 0; i < W; ++i) {
      if (n >= 64 * (i + 1)) {
        b.w[i] = ~std::uint64_t{0};
      } else if (n > 64 * i) {
        b.w[i] = (std::uint64_t{1} << (n - 64 * i)) - 1;
      }
    }
    return b;
  }

  bool test(std::size_t v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
  void set(std::size_t v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  bool any() const {
    std::uint64_t acc = 0;
    for (auto x : w) acc |= x;
    return acc != 0;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }

  FixedBits& operator|=(const FixedBits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  FixedBits& operator&=(const FixedBits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  /// this &= ~o
  FixedBits& remove(const FixedBits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  friend FixedBits operator|(FixedBits a, const FixedBits& b) { return a |= b; }
  friend FixedBits operator&(FixedBits a, const FixedBits& b) { return a &= b; }
  friend bool operator==(const FixedBits&, const FixedBits&) = default;

  /// Calls f(v) for each set bit in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }
};

/// popcount(a & b) without materializing the intersection.
template <std::size_t W>
inline int count_and(const FixedBits<W>& a, const FixedBits<W>& b) {
  int c = 0;
  for (std::size_t i = 0; i < W; ++i) c += std::popcount(a.w[i] & b.w[i]);
  return c;
}

}  // namespace kdis::detail
