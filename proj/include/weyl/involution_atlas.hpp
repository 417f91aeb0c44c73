#pragma once

#include "weyl/linear_algebra.hpp"
#include "weyl/root_mask.hpp"
#include "weyl/root_system.hpp"
#include "weyl/weyl_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weyl {

/// A set of pairwise orthogonal positive roots; stands for the elementary
/// abelian subgroup generated by their reflections. The root system is the
/// one the surrounding call works in.
struct Cube {
  RootMask roots;

  std::size_t rank() const { return roots.count(); }
  /// Roots in canonical order; x_i of the cube algebra belongs to roots()[i].
  std::vector<std::size_t> root_list() const { return roots.indices(); }

  friend bool operator==(const Cube&, const Cube&) = default;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

/// g with g^2 = 1, identified by its (-1)-eigenspace.
struct Involution {
  GroupElement element;
  /// RREF basis of the (-1)-eigenspace in simple-root coordinates.
  RationalMatrix eigenspace;
  /// Positive roots lying in the (-1)-eigenspace; determines the eigenspace.
  RootMask eigen_roots;
  int degree = 0;

  /// Throws UsageError unless g squares to the identity.
  static Involution from_element(const GroupElement& g);
};

struct InvolutionClass {
  Involution representative;
  int degree = 0;
  std::uint64_t size = 0;
  Cube splitting;
};

struct CubeClass {
  Cube representative;
  std::uint64_t size = 0;
};

struct AtlasOptions {
  unsigned threads = 1;
};

/// A cube together with the positive roots of the span of its roots.
struct CubeRecord {
  Cube cube;
  RootMask span_roots;
};

/// Every clique of the orthogonality graph on positive roots (empty one
/// included), in depth-first order over ascending root indices.
std::vector<Cube> enumerate_cubes(const RootSystem& rs, const AtlasOptions& opt = {});
/// Same enumeration, with the positive roots in each cube's span computed by
/// the SIMD kernels alongside.
std::vector<CubeRecord> enumerate_cube_records(const RootSystem& rs, const AtlasOptions& opt = {});

/// Positive roots in the span of a set of pairwise orthogonal roots.
RootMask span_roots(const RootSystem& rs, const Cube& c);

/// Product of the reflections of the cube.
Involution involution_from_cube(const RootSystemPtr& rs, const Cube& c);

/// Greedy: the first eigenspace root in canonical order, then recurse inside
/// its orthogonal complement. Throws InternalError when no root is left in a
/// nonzero eigenspace.
Cube split_involution(const RootSystem& rs, const Involution& inv);
Cube split_eigen_roots(const RootSystem& rs, const RootMask& eigen_roots, int degree);

/// Image of a set of positive roots under g, taking positive parts.
RootMask act_on_mask(const RootSystem& rs, std::span<const std::int32_t> images, const RootMask& m);

/// Sorted by (degree, size, minimal key).
std::vector<InvolutionClass> classify_involutions(const RootSystemPtr& rs, const AtlasOptions& opt = {});

struct CubeClassification {
  std::vector<CubeClass> classes;                  // sorted by (rank, size, minimal key)
  std::vector<std::vector<Cube>> members;         // parallel to classes
};
CubeClassification classify_cubes(const RootSystem& rs, const AtlasOptions& opt = {});

/// Everything the invariant computations need about one Weyl group.
struct Atlas {
  RootSystemPtr roots;
  std::uint64_t group_order = 0;
  std::uint64_t involution_count = 0;
  std::uint64_t cube_count = 0;
  std::vector<InvolutionClass> involution_classes;
  std::vector<CubeClass> cube_classes;

  /// "<degree><letter>", e.g. "4a", "4b"; letters count within a degree.
  std::string class_id(std::size_t i) const;
  std::size_t class_index(const std::string& id) const;
};

Atlas build_atlas(const RootSystemPtr& rs, const AtlasOptions& opt = {});

struct CoverageEntry {
  std::size_t cube_class = 0;
  std::size_t cube_rank = 0;
  std::uint64_t class_size = 0;
  bool covered = false;
  Cube witness;  // a member inside the subsystem when covered
};

struct ReductionReport {
  std::string type;
  std::string sub_type;
  std::uint64_t group_order = 0;
  std::uint64_t sub_order = 0;
  std::uint64_t index = 0;
  bool index_odd = false;
  std::vector<CoverageEntry> coverage;
  bool all_covered = false;
  bool pass = false;
};

ReductionReport verify_reduction(const RootSystemPtr& rs, const SubsystemEmbedding& sub,
                                 const AtlasOptions& opt = {});

/// The subsystem used for each exceptional type: E6:D5, E7:A1xD6, E8:D8,
/// F4:B4, G2:A1xA1. Empty optional for other types.
std::optional<TypeSpec> reduction_target(const TypeSpec& type);

}  // namespace weyl
