#include "weyl/cube_algebra.hpp"

#include "weyl/errors.hpp"

#include <bit>

namespace weyl {
namespace {

int popcount(unsigned x) { return std::popcount(x); }

// Keep only terms t^k alpha_I with k + |I| <= max_degree.
BasePoly cap(BasePoly p, unsigned subset, int max_degree) {
  if (max_degree < 0) return p;
  const int room = max_degree - popcount(subset);
  return room < 0 ? BasePoly::zero() : p.truncated(room);
}

}  // namespace

CubeClassElement::CubeClassElement(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank)
    throw UsageError("cube rank " + std::to_string(rank) + " outside [0, " + std::to_string(kMaxRank) + "]");
  coeffs_.assign(std::size_t{1} << rank, BasePoly::zero());
}

CubeClassElement CubeClassElement::one(int rank) { return basis(rank, 0); }

CubeClassElement CubeClassElement::generator(int rank, int i) {
  if (i < 0 || i >= rank) throw UsageError("cube generator index out of range");
  return basis(rank, 1U << i);
}

CubeClassElement CubeClassElement::basis(int rank, unsigned subset, BasePoly coeff) {
  CubeClassElement e(rank);
  e.coeffs_.at(subset) = coeff;
  return e;
}

bool CubeClassElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

CubeClassElement CubeClassElement::component(int degree) const {
  CubeClassElement out(rank_);
  for (unsigned s = 0; s < coeffs_.size(); ++s) {
    const int k = degree - popcount(s);
    if (k >= 0 && coeffs_[s].coefficient(k)) out.coeffs_[s] = BasePoly::t(k);
  }
  return out;
}

CubeClassElement CubeClassElement::truncated(int max_degree) const {
  CubeClassElement out(rank_);
  for (unsigned s = 0; s < coeffs_.size(); ++s) out.coeffs_[s] = cap(coeffs_[s], s, max_degree);
  return out;
}

CubeClassElement CubeClassElement::times_t(int k) const {
  CubeClassElement out(rank_);
  for (unsigned s = 0; s < coeffs_.size(); ++s) out.coeffs_[s] = coeffs_[s].shifted(k);
  return out;
}

bool CubeClassElement::is_homogeneous() const {
  int degree = -1;
  for (unsigned s = 0; s < coeffs_.size(); ++s) {
    const auto& c = coeffs_[s];
    if (c.is_zero()) continue;
    if (!c.is_monomial()) return false;
    const int d = c.degree() + popcount(s);
    if (degree >= 0 && d != degree) return false;
    degree = d;
  }
  return true;
}

std::string CubeClassElement::str() const {
  std::string out;
  for (unsigned s = 0; s < coeffs_.size(); ++s) {
    if (coeffs_[s].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < rank_; ++i)
      if (s & (1U << i)) mono += "x" + std::to_string(i + 1);
    const auto& c = coeffs_[s];
    if (mono.empty())
      out += c.str();
    else if (c == BasePoly::one())
      out += mono;
    else if (c.is_monomial())
      out += c.str() + "*" + mono;
    else
      out += "(" + c.str() + ")*" + mono;
  }
  return out.empty() ? "0" : out;
}

CubeClassElement& CubeClassElement::operator+=(const CubeClassElement& o) {
  if (o.rank_ != rank_) throw UsageError("adding cube classes of different ranks");
  for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] += o.coeffs_[s];
  return *this;
}

CubeClassElement cube_mul(const CubeClassElement& a, const CubeClassElement& b, int max_degree) {
  if (a.rank() != b.rank())
    throw UsageError("cube_mul: rank " + std::to_string(a.rank()) + " times rank " + std::to_string(b.rank()));
  CubeClassElement out(a.rank());
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<BasePoly> acc(ca.size());
  for (unsigned i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (unsigned j = 0; j < cb.size(); ++j) {
      if (cb[j].is_zero()) continue;
      // alpha_I alpha_J = t^{|I cap J|} alpha_{I cup J}
      const unsigned u = i | j;
      if (max_degree >= 0 && ca[i].degree() >= 0) {
        // lowest possible degree of the product term
        const int low = popcount(u) + popcount(i & j);
        if (low > max_degree) continue;
      }
      acc[u] += (ca[i] * cb[j]).shifted(popcount(i & j));
    }
  }
  for (unsigned s = 0; s < acc.size(); ++s) out.set(s, cap(acc[s], s, max_degree));
  return out;
}

CubeClassElement mul_one_plus_linear(const CubeClassElement& a, unsigned subset, BasePoly p, int max_degree) {
  if (subset > a.top_subset()) throw UsageError("linear form outside the cube");
  CubeClassElement out = a;
  if (p.is_zero() || subset == 0) return out.truncated(max_degree);
  const auto& ca = a.coefficients();
  for (unsigned s = 0; s < ca.size(); ++s) {
    if (ca[s].is_zero()) continue;
    const BasePoly ps = ca[s] * p;
    for (int i = 0; i < a.rank(); ++i) {
      const unsigned bit = 1U << i;
      if (!(subset & bit)) continue;
      // alpha_S x_i = alpha_{S+i}, or t alpha_S when i is already in S
      if (s & bit) {
        out.set(s, out.coefficient(s) + ps.shifted(1));
      } else {
        out.set(s | bit, out.coefficient(s | bit) + ps);
      }
    }
  }
  return out.truncated(max_degree);
}

BasePoly top_coefficient(const CubeClassElement& a) { return a.coefficient(a.top_subset()); }

}  // namespace weyl
