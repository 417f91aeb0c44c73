#pragma once

#include "weyl/linear_algebra.hpp"
#include "weyl/root_mask.hpp"
#include "weyl/type_spec.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weyl {

struct Root {
  RationalVector coords;          // ambient coordinates
  std::vector<int> simple_coeffs;  // coordinates in the simple-root basis
  int height = 0;                  // sum of simple_coeffs (negative for negative roots)
};

/// An immutable crystallographic root system in exact coordinates.
///
/// Roots are stored positive first, sorted by height and then
/// lexicographically by ambient coordinates; root `i + num_positive()` is the
/// negative of root `i`. The simple roots are the roots of height 1, and
/// `simple_root(j)` gives the index of alpha_j in Bourbaki numbering.
///
/// Everything numeric downstream runs on `ip(i, j)`, the bilinear form scaled
/// by `ip_scale()` so that all values are integers.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const TypeSpec& spec);

  const TypeSpec& type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t ambient_dim() const { return form_diag_.size(); }

  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  const Root& root(std::size_t i) const { return roots_[i]; }
  const std::vector<Root>& roots() const { return roots_; }

  /// Index of the j-th simple root (Bourbaki numbering), 0 <= j < rank.
  std::size_t simple_root(std::size_t j) const { return simple_[j]; }
  const std::vector<std::size_t>& simple_roots() const { return simple_; }

  bool is_positive(std::size_t i) const { return i < num_positive(); }
  std::size_t negative(std::size_t i) const {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }
  /// Index of the positive root in {i, -i}.
  std::size_t positive_part(std::size_t i) const { return i < num_positive() ? i : i - num_positive(); }

  /// The ambient bilinear form (diagonal in ambient coordinates).
  Rational form(const RationalVector& a, const RationalVector& b) const;
  const RationalVector& form_diagonal() const { return form_diag_; }

  /// Scaled integer form on roots: ip(i,j) = ip_scale() * (root i, root j).
  std::int32_t ip(std::size_t i, std::size_t j) const { return ip_[i * roots_.size() + j]; }
  std::int64_t ip_scale() const { return ip_scale_; }
  std::int32_t norm(std::size_t i) const { return ip(i, i); }

  /// Cartan integer 2(a,b)/(b,b) for root indices a, b.
  int cartan_integer(std::size_t a, std::size_t b) const;
  /// rank x rank Cartan matrix A_ij = 2(a_i,a_j)/(a_j,a_j), row-major.
  const std::vector<int>& cartan_matrix() const { return cartan_; }

  std::optional<std::size_t> find_root(std::span<const int> simple_coeffs) const;
  std::optional<std::size_t> find_root_coords(const RationalVector& coords) const;

  /// Permutation of all root indices induced by s_root, root any index.
  std::span<const std::int32_t> reflection_perm(std::size_t root) const;

  /// Rows of the scaled form restricted to positive roots, each padded with
  /// zeros to `padded_positive()` entries (a multiple of 8) for the kernels.
  std::span<const std::int32_t> positive_ip_row(std::size_t i) const {
    return {pos_ip_.data() + i * padded_pos_, padded_pos_};
  }
  std::size_t padded_positive() const { return padded_pos_; }

  /// Mask of all positive roots.
  RootMask all_positive_mask() const;
  /// Positive roots orthogonal to positive root i.
  const RootMask& orthogonal_mask(std::size_t i) const { return orth_[i]; }

  /// Whether atlas-level computations (bitmasks over positive roots) apply.
  bool fits_root_mask() const { return num_positive() <= RootMask::kMaxPositiveRoots; }

 private:
  RootSystem() = default;

  TypeSpec type_;
  int rank_ = 0;
  RationalVector form_diag_;
  std::vector<Root> roots_;
  std::vector<std::size_t> simple_;
  std::vector<int> cartan_;
  std::int64_t ip_scale_ = 1;
  std::vector<std::int32_t> ip_;
  std::vector<std::int32_t> refl_;  // num_positive rows of num_roots entries
  std::size_t padded_pos_ = 0;
  std::vector<std::int32_t> pos_ip_;
  std::vector<RootMask> orth_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(const TypeSpec& spec) { return RootSystem::build(spec); }

/// v - 2(v,m)/(m,m) m in ambient coordinates.
RationalVector reflect(const RootSystem& rs, const Root& mirror, const RationalVector& v);

/// {"type": ..., "rank": r, "roots": [["p/q", ...], ...]}
std::string root_system_json(const RootSystem& rs);

/// Roots chosen inside an ambient system whose Cartan matrix is that of sub_type.
struct SubsystemEmbedding {
  RootSystemPtr ambient;
  TypeSpec sub_type;
  std::vector<std::size_t> sub_simple_roots;  // indices into ambient roots
};

/// Depth-first search over tuples of ambient roots, pruned on partial Cartan
/// matrices. Returns nullopt when no tuple realizes the target.
std::optional<SubsystemEmbedding> find_subsystem(const RootSystemPtr& rs, const TypeSpec& target);

/// Root indices (all signs) of the closure of the chosen roots under their own
/// reflections, sorted.
std::vector<std::size_t> subsystem_closure(const SubsystemEmbedding& sub);
/// Positive roots of the ambient system lying in the closure.
RootMask subsystem_positive_mask(const SubsystemEmbedding& sub);

}  // namespace weyl
