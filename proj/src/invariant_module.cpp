#include "weyl/invariant_module.hpp"

#include "weyl/errors.hpp"

#include <json.hpp>

#include <bit>

namespace weyl {
namespace {

// (1+L)^m = 1 + P(t) L since L^k = t^{k-1} L; P = sum_{k>=1, C(m,k) odd} t^{k-1}.
// Only k <= max_degree can survive truncation.
BasePoly power_series_coefficient(std::int64_t m, int max_degree) {
  BasePoly p;
  const int top = std::min<std::int64_t>(m, max_degree < 0 ? BasePoly::kMaxDegree : max_degree);
  for (int k = 1; k <= top; ++k)
    if ((static_cast<std::uint64_t>(k) & ~static_cast<std::uint64_t>(m)) == 0)  // Lucas: C(m,k) odd
      p += BasePoly::t(k - 1);
  return p;
}

}  // namespace

CubeContext::CubeContext(RootSystemPtr rs, Cube cube) : rs_(std::move(rs)), cube_(cube), roots_(cube.root_list()) {
  if (static_cast<int>(roots_.size()) > CubeClassElement::kMaxRank)
    throw UsageError("cube of rank " + std::to_string(roots_.size()) + " is too large");
  for (std::size_t a = 0; a < roots_.size(); ++a)
    for (std::size_t b = a + 1; b < roots_.size(); ++b)
      if (rs_->ip(roots_[a], roots_[b]) != 0) throw UsageError("cube roots are not pairwise orthogonal");
  const unsigned count = 1U << roots_.size();
  elements_.reserve(count);
  elements_.push_back(identity(rs_));
  for (unsigned s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    elements_.push_back(compose(elements_[s & (s - 1)], reflection_element(rs_, roots_[static_cast<std::size_t>(low)])));
  }
}

const std::vector<std::int64_t>& CubeContext::multiplicities(const Representation& rho) {
  if (rho.home() != rs_) throw UsageError("representation of another group restricted to a cube");
  auto it = mult_.find(rho.descriptor());
  if (it != mult_.end()) return it->second;
  const unsigned count = 1U << roots_.size();
  std::vector<std::int64_t> traces(count);
  for (unsigned s = 0; s < count; ++s) {
    Rational tr = rho.character(elements_[s]);
    if (tr.denominator() != 1)
      throw UsageError("representation '" + rho.descriptor() + "' has a non-integral trace on an involution");
    traces[s] = tr.numerator();
  }
  std::vector<std::int64_t> m(count);
  for (unsigned e = 0; e < count; ++e) {
    std::int64_t sum = 0;
    for (unsigned s = 0; s < count; ++s) sum += (std::popcount(e & s) % 2 ? -1 : 1) * traces[s];
    if (sum < 0 || sum % static_cast<std::int64_t>(count) != 0)
      throw UsageError("representation '" + rho.descriptor() + "' is not orthogonal on this cube: character " +
                       std::to_string(e) + " has multiplicity " + std::to_string(sum) + "/" + std::to_string(count));
    m[e] = sum / static_cast<std::int64_t>(count);
  }
  return mult_.emplace(rho.descriptor(), std::move(m)).first->second;
}

CubeClassElement CubeContext::total_class(const Representation& rho, int max_degree) {
  auto it = total_.find(rho.descriptor());
  if (it != total_.end() && it->second.first >= max_degree) return it->second.second.truncated(max_degree);
  const auto& m = multiplicities(rho);
  CubeClassElement total = CubeClassElement::one(rank());
  for (unsigned e = 1; e < m.size(); ++e) {
    if (m[e] == 0) continue;
    total = mul_one_plus_linear(total, e, power_series_coefficient(m[e], max_degree), max_degree);
  }
  total_.insert_or_assign(rho.descriptor(), std::make_pair(max_degree, total));
  return total;
}

CubeClassElement CubeContext::restrict(const InvariantExpr& expr) {
  CubeClassElement out(rank());
  for (const auto& mono : expr.terms()) {
    CubeClassElement term = CubeClassElement::basis(rank(), 0, BasePoly::t(mono.t_power));
    for (const auto& f : mono.factors)
      term = cube_mul(term, total_class(*f.rep, f.index).component(f.index));
    out += term;
  }
  return out;
}

CubeClassElement restrict_to_cube(const InvariantExpr& expr, const RootSystemPtr& rs, const Cube& c) {
  CubeContext ctx(rs, c);
  return ctx.restrict(expr);
}

BasePoly pairing_on_cube(const InvariantExpr& expr, CubeContext& ctx) {
  if (!expr.is_homogeneous()) throw UsageError("pairing needs a homogeneous expression, got '" + expr.str() + "'");
  const int m = expr.degree();
  const BasePoly top = top_coefficient(ctx.restrict(expr));
  const int gap = m - ctx.rank();
  if (!top.is_zero() && (gap < 0 || top != BasePoly::t(gap)))
    throw InternalError("pairing of a degree-" + std::to_string(m) + " invariant with a degree-" +
                        std::to_string(ctx.rank()) + " involution gave " + top.str());
  return top;
}

BasePoly pairing_on_cube(const InvariantExpr& expr, const RootSystemPtr& rs, const Cube& c) {
  CubeContext ctx(rs, c);
  return pairing_on_cube(expr, ctx);
}

BasePoly pairing(const InvariantExpr& expr, const Atlas& atlas, std::size_t class_index) {
  return pairing_on_cube(expr, atlas.roots, atlas.involution_classes.at(class_index).splitting);
}

std::string InvariantVector::json() const {
  nlohmann::ordered_json j;
  j["degree"] = degree;
  auto c = nlohmann::ordered_json::object();
  for (const auto& [id, p] : coeffs) c[id] = p.str();
  j["coeffs"] = std::move(c);
  return j.dump();
}

InvariantVector expand(const InvariantExpr& expr, const Atlas& atlas) {
  InvariantVector v;
  v.degree = expr.degree();
  for (std::size_t i = 0; i < atlas.involution_classes.size(); ++i)
    v.coeffs.emplace_back(atlas.class_id(i), pairing(expr, atlas, i));
  return v;
}

BasisDescription canonical_basis(const Atlas& atlas) {
  BasisDescription b;
  b.type = atlas.roots->type().str();
  b.rank = atlas.involution_classes.size();
  for (std::size_t i = 0; i < atlas.involution_classes.size(); ++i) {
    b.degrees.push_back(atlas.involution_classes[i].degree);
    b.class_ids.push_back(atlas.class_id(i));
  }
  return b;
}

}  // namespace weyl
