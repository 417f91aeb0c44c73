#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Boost 1.74's mixed rational/integer equality recurses forever under C++20
// reversed-operator lookup. Exact non-template overloads win resolution.
namespace boost {
#define WEYL_RATIONAL_EQ(Int)                                                                         \
  inline bool operator==(const rational<std::int64_t>& a, Int b) {                                     \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);                    \
  }                                                                                                   \
  inline bool operator==(Int b, const rational<std::int64_t>& a) { return a == b; }                   \
  inline bool operator!=(const rational<std::int64_t>& a, Int b) { return !(a == b); }                \
  inline bool operator!=(Int b, const rational<std::int64_t>& a) { return !(a == b); }
WEYL_RATIONAL_EQ(int)
WEYL_RATIONAL_EQ(long)
WEYL_RATIONAL_EQ(long long)
#undef WEYL_RATIONAL_EQ
}  // namespace boost

namespace weyl {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// "p/q" with q >= 1, e.g. "-1/2", "3/1", "0/1".
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Dense exact matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalMatrix transpose() const;
  Rational trace() const;
  Rational determinant() const;

  /// Reduced row echelon form with zero rows dropped.
  RationalMatrix rref() const;
  std::size_t rank() const { return rref().rows(); }
  /// Basis of {v : M v = 0}, returned as the rows of an RREF matrix.
  RationalMatrix nullspace() const;

  /// Coefficients c_0..c_n of det(x I - M) = sum c_k x^k (Faddeev-LeVerrier).
  std::vector<Rational> characteristic_polynomial() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace weyl
