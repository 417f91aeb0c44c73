#pragma once

#include "weyl/involution_atlas.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weyl {

/// A cache file that does not describe the atlas it claims to.
struct CacheCorrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"type", "group_order", "involution_classes": [{"degree", "size",
/// "splitting_roots", "representative_eigenspace"}], "cube_classes": [{"rank",
/// "size", "roots"}]}. Root references are indices in canonical order.
std::string atlas_json(const Atlas& atlas);

/// Inverse of atlas_json. Rebuilds each representative from its splitting
/// and throws CacheCorrupt unless everything stored is reproduced.
Atlas atlas_from_json(const RootSystemPtr& rs, std::string_view text);

struct CacheOptions {
  bool enabled = true;
  std::optional<std::filesystem::path> dir;  // unset: WEYL_CACHE, then ./.weylcache
};

std::filesystem::path resolve_cache_dir(const CacheOptions& opt);
std::filesystem::path cache_file(const std::filesystem::path& dir, const TypeSpec& type);

/// Cached atlas if a valid one exists, otherwise built and written. Corrupt
/// or unreadable files produce a warning on `warn` and are replaced.
Atlas load_or_build_atlas(const RootSystemPtr& rs, const CacheOptions& cache, const AtlasOptions& opt,
                          std::ostream* warn);

}  // namespace weyl
