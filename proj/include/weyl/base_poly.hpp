#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace weyl {

/// Element of F2[t], t the degree-one class of -1. Degrees up to 63.
class BasePoly {
 public:
  static constexpr int kMaxDegree = 63;

  constexpr BasePoly() = default;
  constexpr explicit BasePoly(std::uint64_t bits) : bits_(bits) {}

  static constexpr BasePoly zero() { return BasePoly(0); }
  static constexpr BasePoly one() { return BasePoly(1); }
  /// t^k; throws std::overflow_error past kMaxDegree.
  static BasePoly t(int k = 1);

  std::uint64_t bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool coefficient(int k) const { return k >= 0 && k <= kMaxDegree && ((bits_ >> k) & 1U); }
  /// -1 for zero.
  int degree() const;
  /// Zero or a single power of t.
  bool is_monomial() const { return (bits_ & (bits_ - 1)) == 0; }
  /// Specialization t -> 0, i.e. to a field where -1 is a square.
  bool at_zero() const { return bits_ & 1U; }
  /// Drop all terms of degree above `max_degree` (nothing when negative).
  BasePoly truncated(int max_degree) const;
  /// Multiply by t^k.
  BasePoly shifted(int k) const;

  /// "0", "1", "t", "t^2+1": exponents descending.
  std::string str() const;
  static BasePoly parse(std::string_view text);

  BasePoly& operator+=(BasePoly o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend BasePoly operator+(BasePoly a, BasePoly b) { return a += b; }
  friend BasePoly operator*(BasePoly a, BasePoly b);
  BasePoly& operator*=(BasePoly o) { return *this = *this * o; }
  friend bool operator==(BasePoly, BasePoly) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace weyl
