#pragma once

#include "weyl/representation.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

/// w_i of a catalogued representation, of degree i.
struct SwSymbol {
  RepresentationPtr rep;
  int index = 0;

  friend bool operator==(const SwSymbol& a, const SwSymbol& b) {
    return a.index == b.index && a.rep->descriptor() == b.rep->descriptor();
  }
  friend bool operator<(const SwSymbol& a, const SwSymbol& b) {
    if (a.rep->descriptor() != b.rep->descriptor()) return a.rep->descriptor() < b.rep->descriptor();
    return a.index < b.index;
  }
};

/// t^k times a product of Stiefel-Whitney symbols.
struct Monomial {
  int t_power = 0;
  std::vector<SwSymbol> factors;  // sorted

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b);
};

/// Polynomial over F2[t] in the symbols w_i(rho).
class InvariantExpr {
 public:
  static InvariantExpr zero() { return InvariantExpr(); }
  static InvariantExpr one();
  static InvariantExpr t(int k = 1);
  /// w_i(rho); zero when i > dim rho, one when i == 0.
  static InvariantExpr sw(const RepresentationPtr& rep, int i);

  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous expression (0 for zero); UsageError otherwise.
  int degree() const;

  std::string str() const;

  friend InvariantExpr operator+(const InvariantExpr& a, const InvariantExpr& b);
  friend InvariantExpr operator*(const InvariantExpr& a, const InvariantExpr& b);
  friend bool operator==(const InvariantExpr&, const InvariantExpr&) = default;

 private:
  void normalize();
  std::vector<Monomial> terms_;
};

using RepresentationResolver = std::function<RepresentationPtr(std::string_view)>;

/// Grammar: sums and products of 0, 1, t, t^k, w<i>(<rep>) and parentheses,
/// with ^ for powers, e.g. "w2(cox)*w1(cox) + t*w3(cox)".
InvariantExpr parse_invariant(std::string_view text, const RepresentationResolver& resolve);

}  // namespace weyl
