#include "weyl/weyl_group.hpp"

namespace weyl {
namespace {

using Perm = StabChain::Perm;

Perm mul(const Perm& a, const Perm& b) {  // a after b
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<std::int32_t>(i);
  return out;
}

bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (static_cast<std::size_t>(a[i]) != i) return false;
  return true;
}

std::size_t first_moved(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (static_cast<std::size_t>(a[i]) != i) return i;
  return a.size();
}

Perm iota_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

StabChain::StabChain(std::size_t degree, std::vector<Perm> generators, std::vector<std::size_t> base)
    : degree_(degree), base_(std::move(base)) {
  for (auto& g : generators) {
    if (g.size() != degree_) throw UsageError("generator of wrong degree");
    if (!is_identity(g)) strong_.push_back(std::move(g));
  }
  // Every generator must move some base point.
  for (const auto& g : strong_) {
    bool moves = false;
    for (auto b : base_) moves = moves || static_cast<std::size_t>(g[b]) != b;
    if (!moves) base_.push_back(first_moved(g));
  }
  levels_.resize(base_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_level(l);

  // Deepest level first; a new strong generator sends us back to the deepest
  // level it touched.
  std::size_t level = levels_.size();
  while (level-- > 0) {
    bool restarted = false;
    const auto gens = level_generators(level);
    for (std::size_t k = 0; k < levels_[level].orbit.size() && !restarted; ++k) {
      const auto p = static_cast<std::size_t>(levels_[level].orbit[k]);
      for (const Perm* s : gens) {
        const auto q = static_cast<std::size_t>((*s)[p]);
        const auto& lv = levels_[level];
        Perm h = mul(inverse(lv.transversal[static_cast<std::size_t>(lv.slot[q])]), mul(*s, lv.transversal[k]));
        std::size_t stopped = 0;
        if (sift(h, level + 1, stopped)) continue;
        if (stopped == levels_.size()) {
          base_.push_back(first_moved(h));
          levels_.emplace_back();
        }
        strong_.push_back(std::move(h));
        for (std::size_t l = level + 1; l < levels_.size(); ++l) rebuild_level(l);
        level = stopped + 1;  // loop decrement lands on `stopped`
        restarted = true;
        break;
      }
    }
  }
}

std::vector<const Perm*> StabChain::level_generators(std::size_t level) const {
  std::vector<const Perm*> out;
  for (const auto& g : strong_) {
    bool fixes = true;
    for (std::size_t l = 0; l < level && fixes; ++l) fixes = static_cast<std::size_t>(g[base_[l]]) == base_[l];
    if (fixes) out.push_back(&g);
  }
  return out;
}

void StabChain::rebuild_level(std::size_t level) {
  Level& lv = levels_[level];
  lv.point = base_[level];
  lv.orbit.assign(1, static_cast<std::int32_t>(lv.point));
  lv.slot.assign(degree_, -1);
  lv.slot[lv.point] = 0;
  lv.transversal.assign(1, iota_perm(degree_));
  const auto gens = level_generators(level);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (const Perm* s : gens) {
      const auto img = static_cast<std::size_t>((*s)[static_cast<std::size_t>(lv.orbit[k])]);
      if (lv.slot[img] >= 0) continue;
      lv.slot[img] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(static_cast<std::int32_t>(img));
      lv.transversal.push_back(mul(*s, lv.transversal[k]));
    }
  }
}

bool StabChain::sift(Perm& g, std::size_t from_level, std::size_t& stopped_at) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const auto y = static_cast<std::size_t>(g[lv.point]);
    if (lv.slot[y] < 0) {
      stopped_at = l;
      return false;
    }
    g = mul(inverse(lv.transversal[static_cast<std::size_t>(lv.slot[y])]), g);
  }
  stopped_at = levels_.size();
  return is_identity(g);
}

std::uint64_t StabChain::order() const {
  std::uint64_t n = 1;
  for (const auto& lv : levels_)
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(lv.orbit.size()), &n))
      throw UsageError("group order exceeds 64 bits");
  return n;
}

std::vector<std::size_t> StabChain::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

bool StabChain::contains(std::span<const std::int32_t> perm) const {
  if (perm.size() != degree_) return false;
  std::vector<bool> hit(degree_, false);
  for (auto v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= degree_ || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  Perm g(perm.begin(), perm.end());
  std::size_t stopped = 0;
  return sift(g, 0, stopped);
}

StabChain weyl_stab_chain(const RootSystem& rs) {
  std::vector<Perm> gens;
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < static_cast<std::size_t>(rs.rank()); ++i) {
    auto p = rs.reflection_perm(rs.simple_root(i));
    gens.emplace_back(p.begin(), p.end());
    base.push_back(rs.simple_root(i));
  }
  return StabChain(rs.num_roots(), std::move(gens), std::move(base));
}

std::uint64_t group_order(const RootSystem& rs) { return weyl_stab_chain(rs).order(); }

std::uint64_t reflection_subgroup_order(const RootSystem& rs, std::span<const std::size_t> roots) {
  std::vector<Perm> gens;
  std::vector<std::size_t> base(roots.begin(), roots.end());
  for (auto r : roots) {
    auto p = rs.reflection_perm(r);
    gens.emplace_back(p.begin(), p.end());
  }
  return StabChain(rs.num_roots(), std::move(gens), std::move(base)).order();
}

}  // namespace weyl
