#include "weyl/linear_algebra.hpp"

#include "weyl/errors.hpp"

#include <charconv>
#include <utility>

namespace weyl {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw UsageError("malformed rational '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw UsageError("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw UsageError("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw UsageError("trace of a non-square matrix");
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw UsageError("determinant of a non-square matrix");
  RationalMatrix m = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t pivot = c;
    while (pivot < rows_ && m(pivot, c) == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != c) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(pivot, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::rref() const {
  RationalMatrix m = *this;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows_ && m(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(m(pivot, k), m(lead_row, k));
    Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t k = 0; k < cols_; ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = 0; k < cols_; ++k) m(r, k) -= f * m(lead_row, k);
    }
    ++lead_row;
  }
  RationalMatrix out(lead_row, cols_);
  for (std::size_t r = 0; r < lead_row; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = m(r, c);
  return out;
}

RationalMatrix RationalMatrix::nullspace() const {
  RationalMatrix e = rref();
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    std::size_t c = 0;
    while (e(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  std::vector<RationalVector> basis;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    RationalVector v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RationalMatrix(0, cols_);
  return from_rows(basis).rref();
}

std::vector<Rational> RationalMatrix::characteristic_polynomial() const {
  if (rows_ != cols_) throw UsageError("characteristic polynomial of a non-square matrix");
  const std::size_t n = rows_;
  // det(xI - M) = sum_k c_k x^k with c_n = 1; M_k = M (M_{k-1} + c_{n-k+1} I)
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
    mk = (*this) * shifted;
    c[n - k] = -mk.trace() / static_cast<std::int64_t>(k);
  }
  return c;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("dimension mismatch in matrix product");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("dimension mismatch in matrix sum");
  RationalMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("dimension mismatch in matrix difference");
  RationalMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

}  // namespace weyl
