#pragma once

#include "weyl/base_poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weyl {

/// Element of the mod-2 invariant algebra of a rank-n cube over F2[t], in the
/// basis alpha_I = prod_{i in I} x_i (I a bitmask over 0..n-1). Products
/// reduce with x_i^2 = t x_i. The term t^k alpha_I has degree k + |I|.
class CubeClassElement {
 public:
  static constexpr int kMaxRank = 12;

  explicit CubeClassElement(int rank);

  static CubeClassElement one(int rank);
  /// x_i, i in [0, rank).
  static CubeClassElement generator(int rank, int i);
  static CubeClassElement basis(int rank, unsigned subset, BasePoly coeff = BasePoly::one());

  int rank() const { return rank_; }
  unsigned top_subset() const { return (1U << rank_) - 1; }
  const BasePoly& coefficient(unsigned subset) const { return coeffs_.at(subset); }
  void set(unsigned subset, BasePoly p) { coeffs_.at(subset) = p; }
  const std::vector<BasePoly>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Degree-d part.
  CubeClassElement component(int degree) const;
  /// Drop terms of degree above max_degree.
  CubeClassElement truncated(int max_degree) const;
  CubeClassElement times_t(int k) const;
  /// Every term has the same degree (zero counts as homogeneous).
  bool is_homogeneous() const;

  /// Sum of "coeff*x1x2" terms, e.g. "1 + t*x1 + x1x2"; "0" for zero.
  std::string str() const;

  CubeClassElement& operator+=(const CubeClassElement& o);
  friend CubeClassElement operator+(CubeClassElement a, const CubeClassElement& b) { return a += b; }
  friend bool operator==(const CubeClassElement&, const CubeClassElement&) = default;

 private:
  int rank_;
  std::vector<BasePoly> coeffs_;
};

/// Full product reduced to the alpha_I basis; rank mismatch is a UsageError.
/// With max_degree >= 0 terms of higher degree are dropped.
CubeClassElement cube_mul(const CubeClassElement& a, const CubeClassElement& b, int max_degree = -1);

/// a * (1 + p * L_S) with L_S = sum_{i in S} x_i.
CubeClassElement mul_one_plus_linear(const CubeClassElement& a, unsigned subset, BasePoly p, int max_degree = -1);

/// Coefficient of alpha_{[1,n]}.
BasePoly top_coefficient(const CubeClassElement& a);

}  // namespace weyl
