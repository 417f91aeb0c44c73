#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace weyl {

/// Fixed-width set of positive-root indices. Atlas computations are limited
/// to root systems with at most kMaxPositiveRoots positive roots (E8 has 120).
class RootMask {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kMaxPositiveRoots = 64 * kWords;

  constexpr RootMask() = default;

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < kWords; ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Lowest index at or above `from`, or kMaxPositiveRoots when none.
  std::size_t next(std::size_t from) const {
    for (std::size_t k = from >> 6; k < kWords; ++k) {
      std::uint64_t w = words_[k];
      if (k == (from >> 6)) w &= ~std::uint64_t{0} << (from & 63);
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
    }
    return kMaxPositiveRoots;
  }

  bool subset_of(const RootMask& o) const {
    for (std::size_t k = 0; k < kWords; ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  std::array<std::uint64_t, kWords>& words() { return words_; }
  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  RootMask& operator&=(const RootMask& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  RootMask& operator|=(const RootMask& o) {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend RootMask operator&(RootMask a, const RootMask& b) { return a &= b; }
  friend RootMask operator|(RootMask a, const RootMask& b) { return a |= b; }

  friend bool operator==(const RootMask&, const RootMask&) = default;
  friend auto operator<=>(const RootMask&, const RootMask&) = default;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct RootMaskHash {
  std::size_t operator()(const RootMask& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : m.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

}  // namespace weyl
