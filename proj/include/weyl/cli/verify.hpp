#pragma once

#include "weyl/atlas_io.hpp"
#include "weyl/involution_atlas.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl::cli {

/// Fast: the rank <= 4 oracle and property suites. Standard: every criterion,
/// pairing deltas up to rank 6. Full: pairing deltas for E7 and E8 as well.
enum class VerifyLevel { Fast, Standard, Full };

struct VerifyConfig {
  VerifyLevel level = VerifyLevel::Standard;
  AtlasOptions atlas;
  CacheOptions cache{false, {}};
  std::ostream* log = nullptr;  // progress and warnings
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

CriterionResult check_basis_tables(const VerifyConfig& cfg);
CriterionResult check_reduction_indices(const VerifyConfig& cfg);
CriterionResult check_cube_coverage(const VerifyConfig& cfg);
CriterionResult check_pairing_delta(const VerifyConfig& cfg);
CriterionResult check_splitting_independence(const VerifyConfig& cfg);
CriterionResult check_oracle_equivalence(const VerifyConfig& cfg);
CriterionResult check_hard_cases(const VerifyConfig& cfg);
CriterionResult check_property_suites(const VerifyConfig& cfg);

/// Criteria 1..8 in order; criteria outside the level are reported skipped.
std::vector<CriterionResult> run_verify(const VerifyConfig& cfg);

/// "PASS  3 cube coverage (0.41 s): ..." or FAIL / SKIP.
std::string format_result(const CriterionResult& r);

/// Types of rank <= 6 used for the pairing-delta check.
std::vector<std::string> pairing_delta_types(VerifyLevel level);

}  // namespace weyl::cli
