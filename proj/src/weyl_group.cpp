#include "weyl/weyl_group.hpp"

#include "weyl/simd/kernels.hpp"

namespace weyl {

GroupElement::GroupElement(RootSystemPtr home, std::vector<std::int32_t> images)
    : home_(std::move(home)), images_(std::move(images)) {
  if (!home_) throw UsageError("group element without a root system");
  const std::size_t n = home_->num_roots();
  if (images_.size() != n)
    throw UsageError("group element has " + std::to_string(images_.size()) + " images, root system has " +
                     std::to_string(n) + " roots");
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = images_[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
      throw UsageError("group element images are not a permutation of the roots");
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < home_->num_positive(); ++i)
    if (static_cast<std::size_t>(images_[home_->negative(i)]) != home_->negative(static_cast<std::size_t>(images_[i])))
      throw UsageError("group element does not commute with negation");
}

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (static_cast<std::size_t>(images_[i]) != i) return false;
  return true;
}

bool GroupElement::is_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (static_cast<std::size_t>(images_[static_cast<std::size_t>(images_[i])]) != i) return false;
  return true;
}

GroupElement identity(const RootSystemPtr& rs) {
  std::vector<std::int32_t> img(rs->num_roots());
  std::iota(img.begin(), img.end(), 0);
  return GroupElement(rs, std::move(img));
}

GroupElement reflection_element(const RootSystemPtr& rs, std::size_t root) {
  if (root >= rs->num_roots()) throw UsageError("root index out of range");
  auto perm = rs->reflection_perm(root);
  return GroupElement(rs, std::vector<std::int32_t>(perm.begin(), perm.end()));
}

GroupElement reflection_element(const RootSystemPtr& rs, const Root& root) {
  auto idx = rs->find_root_coords(root.coords);
  if (!idx) throw UsageError("reflection_element: vector is not a root of " + rs->type().str());
  return reflection_element(rs, *idx);
}

GroupElement compose(const GroupElement& x, const GroupElement& y) {
  if (x.home_ptr() != y.home_ptr()) throw UsageError("compose: elements of different root systems");
  std::vector<std::int32_t> out(y.images().size());
  simd::active().gather(x.images().data(), y.images().data(), out.data(), out.size());
  return GroupElement(x.home_ptr(), std::move(out));
}

GroupElement invert(const GroupElement& x) {
  std::vector<std::int32_t> out(x.images().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[x[i]] = static_cast<std::int32_t>(i);
  return GroupElement(x.home_ptr(), std::move(out));
}

GroupElement conjugate(const GroupElement& g, const GroupElement& x) { return compose(compose(x, g), invert(x)); }

int order_of(const GroupElement& x) {
  int k = 1;
  GroupElement p = x;
  while (!p.is_identity()) {
    p = compose(p, x);
    ++k;
  }
  return k;
}

RationalMatrix element_matrix(const GroupElement& x) {
  const auto r = static_cast<std::size_t>(x.home().rank());
  RationalMatrix m(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto& img = x.home().root(x[x.home().simple_root(j)]).simple_coeffs;
    for (std::size_t i = 0; i < r; ++i) m(i, j) = img[i];
  }
  return m;
}

std::int64_t element_trace(const GroupElement& x) {
  std::int64_t t = 0;
  for (std::size_t j = 0; j < static_cast<std::size_t>(x.home().rank()); ++j)
    t += x.home().root(x[x.home().simple_root(j)]).simple_coeffs[j];
  return t;
}

GroupElement word_element(const RootSystemPtr& rs, std::span<const int> word) {
  GroupElement g = identity(rs);
  for (int s : word) {
    if (s < 0 || s >= rs->rank()) throw UsageError("word letter out of range");
    g = compose(g, reflection_element(rs, rs->simple_root(static_cast<std::size_t>(s))));
  }
  return g;
}

}  // namespace weyl
