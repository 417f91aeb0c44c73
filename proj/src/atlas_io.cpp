#include "weyl/atlas_io.hpp"

#include "weyl/errors.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace weyl {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

ordered_json index_list(const RootMask& m) {
  auto out = ordered_json::array();
  for (auto i : m.indices()) out.push_back(i);
  return out;
}

RootMask mask_from(const RootSystem& rs, const nlohmann::json& arr) {
  if (!arr.is_array()) throw CacheCorrupt("root list is not an array");
  RootMask m;
  for (const auto& v : arr) {
    if (!v.is_number_unsigned()) throw CacheCorrupt("root index is not a non-negative integer");
    const auto i = v.get<std::size_t>();
    if (i >= rs.num_positive()) throw CacheCorrupt("root index out of range");
    if (m.test(i)) throw CacheCorrupt("repeated root index");
    m.set(i);
  }
  return m;
}

bool pairwise_orthogonal(const RootSystem& rs, const RootMask& m) {
  for (auto i : m.indices())
    for (auto j : m.indices())
      if (i < j && rs.ip(i, j) != 0) return false;
  return true;
}

}  // namespace

std::string atlas_json(const Atlas& atlas) {
  ordered_json j;
  j["type"] = atlas.roots->type().str();
  j["group_order"] = atlas.group_order;
  auto inv = ordered_json::array();
  for (const auto& c : atlas.involution_classes) {
    ordered_json e;
    e["degree"] = c.degree;
    e["size"] = c.size;
    e["splitting_roots"] = index_list(c.splitting.roots);
    auto rows = ordered_json::array();
    const auto& m = c.representative.eigenspace;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto row = ordered_json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(r, k)));
      rows.push_back(std::move(row));
    }
    e["representative_eigenspace"] = std::move(rows);
    inv.push_back(std::move(e));
  }
  j["involution_classes"] = std::move(inv);
  auto cubes = ordered_json::array();
  for (const auto& c : atlas.cube_classes) {
    ordered_json e;
    e["rank"] = c.representative.rank();
    e["size"] = c.size;
    e["roots"] = index_list(c.representative.roots);
    cubes.push_back(std::move(e));
  }
  j["cube_classes"] = std::move(cubes);
  return j.dump(1) + "\n";
}

Atlas atlas_from_json(const RootSystemPtr& rs, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CacheCorrupt(std::string("unparsable JSON: ") + e.what());
  }
  try {
    if (j.at("type").get<std::string>() != rs->type().str()) throw CacheCorrupt("type mismatch");
    Atlas atlas;
    atlas.roots = rs;
    atlas.group_order = j.at("group_order").get<std::uint64_t>();
    if (atlas.group_order != group_order(*rs)) throw CacheCorrupt("group order mismatch");

    for (const auto& e : j.at("involution_classes")) {
      Cube split;
      split.roots = mask_from(*rs, e.at("splitting_roots"));
      if (!pairwise_orthogonal(*rs, split.roots)) throw CacheCorrupt("splitting roots not orthogonal");
      InvolutionClass c{involution_from_cube(rs, split), e.at("degree").get<int>(),
                        e.at("size").get<std::uint64_t>(), split};
      if (c.representative.degree != c.degree || static_cast<int>(c.splitting.rank()) != c.degree)
        throw CacheCorrupt("stored degree does not match the splitting");
      const auto& rows = e.at("representative_eigenspace");
      const auto& m = c.representative.eigenspace;
      if (rows.size() != m.rows()) throw CacheCorrupt("eigenspace dimension mismatch");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (rows[r].size() != m.cols()) throw CacheCorrupt("eigenspace row length mismatch");
        for (std::size_t k = 0; k < m.cols(); ++k)
          if (parse_rational(rows[r][k].get<std::string>()) != m(r, k))
            throw CacheCorrupt("eigenspace does not match the splitting");
      }
      if (split_involution(*rs, c.representative) != c.splitting)
        throw CacheCorrupt("splitting is not the canonical one");
      atlas.involution_count += c.size;
      atlas.involution_classes.push_back(std::move(c));
    }
    for (const auto& e : j.at("cube_classes")) {
      CubeClass c;
      c.size = e.at("size").get<std::uint64_t>();
      c.representative.roots = mask_from(*rs, e.at("roots"));
      if (!pairwise_orthogonal(*rs, c.representative.roots)) throw CacheCorrupt("cube roots not orthogonal");
      if (e.at("rank").get<std::size_t>() != c.representative.rank()) throw CacheCorrupt("cube rank mismatch");
      atlas.cube_count += c.size;
      atlas.cube_classes.push_back(std::move(c));
    }
    if (atlas.involution_classes.empty() || atlas.involution_classes.front().degree != 0 ||
        atlas.involution_classes.front().size != 1)
      throw CacheCorrupt("missing identity class");
    if (atlas_json(atlas) != std::string(text)) throw CacheCorrupt("not in canonical form");
    return atlas;
  } catch (const nlohmann::json::exception& e) {
    throw CacheCorrupt(std::string("malformed atlas: ") + e.what());
  } catch (const UsageError& e) {
    throw CacheCorrupt(std::string("inconsistent atlas: ") + e.what());
  }
}

fs::path resolve_cache_dir(const CacheOptions& opt) {
  if (opt.dir) return *opt.dir;
  if (const char* env = std::getenv("WEYL_CACHE"); env && *env) return fs::path(env);
  return fs::path(".weylcache");
}

fs::path cache_file(const fs::path& dir, const TypeSpec& type) { return dir / (type.str() + ".json"); }

Atlas load_or_build_atlas(const RootSystemPtr& rs, const CacheOptions& cache, const AtlasOptions& opt,
                          std::ostream* warn) {
  if (!cache.enabled) return build_atlas(rs, opt);
  const fs::path dir = resolve_cache_dir(cache);
  const fs::path file = cache_file(dir, rs->type());
  std::error_code ec;
  if (fs::exists(file, ec)) {
    std::ifstream in(file, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return atlas_from_json(rs, buf.str());
    } catch (const CacheCorrupt& e) {
      if (warn) *warn << "warning: discarding cache " << file.string() << ": " << e.what() << "\n";
    }
  }
  Atlas atlas = build_atlas(rs, opt);
  fs::create_directories(dir, ec);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << atlas_json(atlas);
    if (!out) {
      if (warn) *warn << "warning: cannot write cache " << file.string() << "\n";
      fs::remove(tmp, ec);
      return atlas;
    }
  }
  fs::rename(tmp, file, ec);
  if (ec && warn) *warn << "warning: cannot write cache " << file.string() << ": " << ec.message() << "\n";
  return atlas;
}

}  // namespace weyl
