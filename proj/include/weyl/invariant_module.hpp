#pragma once

#include "weyl/base_poly.hpp"
#include "weyl/cube_algebra.hpp"
#include "weyl/invariant_expr.hpp"
#include "weyl/involution_atlas.hpp"

#include <map>
#include <string>
#include <vector>

namespace weyl {

/// Restriction machinery for one cube: its 2^n elements and, per
/// representation, the character multiplicities and the total
/// Stiefel-Whitney class. Reuse one context for many expressions.
class CubeContext {
 public:
  CubeContext(RootSystemPtr rs, Cube cube);

  const Cube& cube() const { return cube_; }
  int rank() const { return static_cast<int>(roots_.size()); }
  const std::vector<std::size_t>& roots() const { return roots_; }
  /// Product of the reflections of roots_[i] for i in `subset`.
  const GroupElement& element(unsigned subset) const { return elements_.at(subset); }

  /// m_E for every character E (bit i set iff E(s_i) = -1). Throws
  /// UsageError when some m_E is negative or non-integral.
  const std::vector<std::int64_t>& multiplicities(const Representation& rho);

  /// prod_E (1 + L_E)^{m_E}, terms of degree above max_degree dropped.
  CubeClassElement total_class(const Representation& rho, int max_degree);

  CubeClassElement restrict(const InvariantExpr& expr);

 private:
  RootSystemPtr rs_;
  Cube cube_;
  std::vector<std::size_t> roots_;
  std::vector<GroupElement> elements_;
  std::map<std::string, std::vector<std::int64_t>> mult_;
  std::map<std::string, std::pair<int, CubeClassElement>> total_;
};

/// Image of expr under I_G -> I_C.
CubeClassElement restrict_to_cube(const InvariantExpr& expr, const RootSystemPtr& rs, const Cube& c);

/// Top coefficient of the restriction to `c`; expr must be homogeneous.
BasePoly pairing_on_cube(const InvariantExpr& expr, CubeContext& ctx);
BasePoly pairing_on_cube(const InvariantExpr& expr, const RootSystemPtr& rs, const Cube& c);

/// <expr, sigma> through the class's stored splitting.
BasePoly pairing(const InvariantExpr& expr, const Atlas& atlas, std::size_t class_index);

/// Coordinates in the basis {e(sigma)}.
struct InvariantVector {
  int degree = 0;
  std::vector<std::pair<std::string, BasePoly>> coeffs;  // class id -> coefficient, atlas order

  /// {"degree": m, "coeffs": {"<class-id>": "t^k" | "0", ...}}
  std::string json() const;
};

InvariantVector expand(const InvariantExpr& expr, const Atlas& atlas);

struct BasisDescription {
  std::string type;
  std::size_t rank = 0;
  std::vector<int> degrees;  // ascending
  std::vector<std::string> class_ids;
};

BasisDescription canonical_basis(const Atlas& atlas);

}  // namespace weyl
