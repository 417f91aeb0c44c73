#pragma once

#include "weyl/invariant_module.hpp"
#include "weyl/representation.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace weyl {

struct GapBudget {
  /// Exterior powers of the Coxeter representation up to this k.
  int max_exterior = 3;
  /// Include the permutation representations on roots and on subsystem conjugates.
  bool permutations = true;
  /// Add sums and tensor products of two base entries.
  bool pairs = true;
  /// Hard cap on catalogue entries; exceeding it marks the catalogue partial.
  std::size_t max_catalogue = 4096;
  /// Extra subsystems whose conjugates give permutation representations.
  std::vector<TypeSpec> conjugate_subsystems;
};

struct Catalogue {
  std::vector<RepresentationPtr> base;     // irreducible-ish building blocks
  std::vector<RepresentationPtr> entries;  // base plus combinations, deterministic order
  bool partial = false;
};

Catalogue build_catalogue(const RootSystemPtr& rs, const GapBudget& budget);

struct GapHit {
  std::string rep;
  std::int64_t gap = 0;
};

struct GapFindings {
  std::string type;
  std::array<std::string, 2> pair;
  int degree = 0;
  std::int64_t target = 0;  // 2^degree
  std::vector<GapHit> hits;
  std::size_t catalogue_size = 0;
  bool partial = false;

  /// {"pair": [...], "target": 2^n, "hits": [{"rep": ..., "gap": g}], "catalogue_size": N}
  std::string json() const;
};

/// Every catalogue entry with |chi(a) - chi(b)| = 2^n, each hit re-verified
/// on freshly built representatives. UsageError if the degrees differ.
GapFindings search_gap(const Atlas& atlas, std::size_t a, std::size_t b, const Catalogue& catalogue);

/// How well degree-n Stiefel-Whitney monomials of the base catalogue separate
/// the involution classes of degree n.
struct SeparationReport {
  std::string type;
  int degree = 0;
  std::vector<std::string> classes;  // ids of the degree-n classes
  std::size_t expressions = 0;      // monomials tried
  std::size_t rank = 0;             // F2-rank of the pairing matrix on these classes
  std::vector<std::array<std::string, 2>> unseparated;  // pairs no monomial tells apart
  bool spans() const { return rank == classes.size(); }
};

SeparationReport sw_separation(const Atlas& atlas, int degree, const std::vector<RepresentationPtr>& reps);

/// The classes of degree n where Stiefel-Whitney classes are not expected to
/// suffice: D_{2m} (m >= 3) with n = m, E7 with n = 3, 4, and E8 with n = 4.
struct HardCase {
  std::string type;
  int degree = 0;
};
std::vector<HardCase> builtin_hard_cases();
/// Hard degrees for a given type (possibly empty).
std::vector<int> hard_degrees(const TypeSpec& type);

struct HardCaseReport {
  HardCase hard_case;
  SeparationReport separation;
  std::vector<GapFindings> findings;  // one per examined pair
};

/// Examines the pairs not separated by the catalogue's Stiefel-Whitney
/// monomials, or every pair of degree-n classes when all are separated.
HardCaseReport analyse_hard_case(const Atlas& atlas, int degree, const Catalogue& catalogue);

}  // namespace weyl
