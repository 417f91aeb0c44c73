#pragma once

#include "weyl/errors.hpp"
#include "weyl/linear_algebra.hpp"
#include "weyl/root_system.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <unordered_map>
#include <vector>

namespace weyl {

/// A Weyl group element, stored as the permutation it induces on the root
/// list: root i maps to root images()[i].
class GroupElement {
 public:
  GroupElement(RootSystemPtr home, std::vector<std::int32_t> images);

  const RootSystem& home() const { return *home_; }
  const RootSystemPtr& home_ptr() const { return home_; }
  std::span<const std::int32_t> images() const { return images_; }
  std::size_t operator[](std::size_t i) const { return static_cast<std::size_t>(images_[i]); }

  bool is_identity() const;
  /// True iff the element squares to the identity (identity included).
  bool is_involution() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.home_ == b.home_ && a.images_ == b.images_;
  }

 private:
  RootSystemPtr home_;
  std::vector<std::int32_t> images_;
};

GroupElement identity(const RootSystemPtr& rs);
GroupElement reflection_element(const RootSystemPtr& rs, std::size_t root);
/// Looks the root up by its ambient coordinates; UsageError if absent.
GroupElement reflection_element(const RootSystemPtr& rs, const Root& root);

/// x * y, acting on roots as x(y(.)).
GroupElement compose(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
/// x g x^{-1}
GroupElement conjugate(const GroupElement& g, const GroupElement& x);
int order_of(const GroupElement& x);

/// Matrix of x in the simple-root basis (column j holds x(alpha_j)).
RationalMatrix element_matrix(const GroupElement& x);
/// Trace of element_matrix(x), computed without building it.
std::int64_t element_trace(const GroupElement& x);

/// Product of simple reflections s_{w[0]} s_{w[1]} ...
GroupElement word_element(const RootSystemPtr& rs, std::span<const int> word);

/// Base and strong generating set for a group of root permutations.
class StabChain {
 public:
  using Perm = std::vector<std::int32_t>;

  /// Schreier-Sims on the given generators with the given initial base.
  StabChain(std::size_t degree, std::vector<Perm> generators, std::vector<std::size_t> base);

  std::uint64_t order() const;
  bool contains(std::span<const std::int32_t> perm) const;
  const std::vector<std::size_t>& base() const { return base_; }
  std::vector<std::size_t> transversal_sizes() const;

 private:
  struct Level {
    std::size_t point;
    std::vector<std::int32_t> orbit;           // points in discovery order
    std::vector<std::int32_t> slot;            // point -> index in orbit, or -1
    std::vector<Perm> transversal;             // maps `point` to orbit[k]
  };

  bool sift(Perm& g, std::size_t from_level, std::size_t& stopped_at) const;
  void rebuild_level(std::size_t level);
  std::vector<const Perm*> level_generators(std::size_t level) const;

  std::size_t degree_;
  std::vector<std::size_t> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

/// Stabilizer chain of W acting on roots, base = simple roots in order.
StabChain weyl_stab_chain(const RootSystem& rs);
std::uint64_t group_order(const RootSystem& rs);
/// Order of the subgroup generated by reflections in the given roots.
std::uint64_t reflection_subgroup_order(const RootSystem& rs, std::span<const std::size_t> roots);

/// Connected components of a key set under a generator action.
template <class Key>
struct OrbitPartition {
  std::vector<std::size_t> class_of;                  // item index -> class index
  std::vector<std::vector<std::size_t>> members;      // class -> item indices, ascending
  std::vector<std::size_t> representative;           // class -> item index of the minimal key
};

/// Union-find over `items` joined along every generator. Classes are ordered
/// by their minimal key. Throws InternalError if a generator maps a key
/// outside the set.
template <class Key, class Hash = std::hash<Key>>
OrbitPartition<Key> orbit_partition(std::span<const Key> items,
                                    std::span<const std::function<Key(const Key&)>> generators) {
  std::unordered_map<Key, std::size_t, Hash> index;
  index.reserve(items.size() * 2);
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);

  std::vector<std::size_t> parent(items.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < items.size(); ++i)
    for (const auto& gen : generators) {
      auto it = index.find(gen(items[i]));
      if (it == index.end()) throw InternalError("orbit_partition: action leaves the key set");
      std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::unordered_map<std::size_t, std::size_t> root_to_class;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto [it, fresh] = root_to_class.emplace(find(i), members.size());
    if (fresh) members.emplace_back();
    members[it->second].push_back(i);
  }
  std::vector<std::size_t> rep(members.size());
  for (std::size_t c = 0; c < members.size(); ++c)
    rep[c] = *std::min_element(members[c].begin(), members[c].end(),
                               [&](std::size_t a, std::size_t b) { return items[a] < items[b]; });
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return items[rep[a]] < items[rep[b]]; });

  OrbitPartition<Key> out;
  out.class_of.assign(items.size(), 0);
  for (std::size_t c = 0; c < order.size(); ++c) {
    out.members.push_back(std::move(members[order[c]]));
    out.representative.push_back(rep[order[c]]);
    for (auto i : out.members.back()) out.class_of[i] = c;
  }
  return out;
}

}  // namespace weyl
