#pragma once

// Brute-force reference computations. Nothing here uses the permutation
// representation, stabilizer chains, cubes or eigenspace keys of the library:
// the group is generated as rational matrices on the ambient space.

#include "weyl/linear_algebra.hpp"
#include "weyl/root_system.hpp"

#include <cstdint>
#include <vector>

namespace weyl::oracle {

struct NaiveClass {
  int degree = 0;          // dimension of the (-1)-eigenspace
  std::uint64_t size = 0;
};

struct NaiveInvolutionData {
  std::uint64_t group_order = 0;
  std::uint64_t involution_count = 0;  // elements with g^2 = 1, identity included
  std::vector<NaiveClass> classes;     // sorted by (degree, size)
};

/// Every group element as an ambient matrix, by breadth-first search from the
/// identity over the simple reflections.
std::vector<RationalMatrix> enumerate_group(const RootSystem& rs);

/// Involutions and their conjugacy classes by direct conjugation.
NaiveInvolutionData naive_involutions(const RootSystem& rs);

/// Closure of the simple roots under their reflections in ambient coordinates.
std::vector<RationalVector> naive_root_closure(const RootSystem& rs);

/// Ambient matrix of the reflection in root `i` (columns are images of e_k).
RationalMatrix ambient_reflection(const RootSystem& rs, std::size_t i);

}  // namespace weyl::oracle
