#include "oracle/naive_group.hpp"
#include "weyl/atlas_io.hpp"
#include "weyl/errors.hpp"
#include "weyl/involution_atlas.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace weyl;
namespace fs = std::filesystem;

namespace {

RootSystemPtr rs_of(const char* t) { return build_root_system(TypeSpec::parse(t)); }

std::vector<Involution> every_involution(const RootSystemPtr& rs) {
  std::vector<Involution> out;
  std::vector<RootMask> seen;
  for (const auto& c : enumerate_cubes(*rs)) {
    auto inv = involution_from_cube(rs, c);
    if (std::find(seen.begin(), seen.end(), inv.eigen_roots) != seen.end()) continue;
    seen.push_back(inv.eigen_roots);
    out.push_back(std::move(inv));
  }
  return out;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("cube counts") {
  CHECK(enumerate_cubes(*rs_of("A1")).size() == 2);
  CHECK(enumerate_cubes(*rs_of("A2")).size() == 4);
  CHECK(enumerate_cubes(*rs_of("B2")).size() == 7);
  CHECK(enumerate_cubes(*rs_of("G2")).size() == 10);
}

TEST_CASE("E8 cube census by rank") {
  const auto cubes = enumerate_cubes(*rs_of("E8"));
  CHECK(cubes.size() == 352876);
  std::vector<std::size_t> by_rank(9, 0);
  for (const auto& c : cubes) ++by_rank[c.rank()];
  CHECK(by_rank == std::vector<std::size_t>{1, 120, 3780, 37800, 122850, 113400, 56700, 16200, 2025});
}

TEST_CASE("cube classes") {
  const auto g2 = classify_cubes(*rs_of("G2"));
  CHECK(g2.classes.size() == 4);

  const auto b2 = classify_cubes(*rs_of("B2"));
  std::vector<std::size_t> rank2;
  for (std::size_t c = 0; c < b2.classes.size(); ++c)
    if (b2.classes[c].representative.rank() == 2) rank2.push_back(c);
  // {e1, e2} and {e1 - e2, e1 + e2} are not conjugate.
  REQUIRE(rank2.size() == 2);
  CHECK(b2.classes[rank2[0]].size == 1);
  CHECK(b2.classes[rank2[1]].size == 1);

  std::uint64_t total = 0;
  for (const auto& c : classify_cubes(*rs_of("F4")).classes) total += c.size;
  CHECK(total == enumerate_cubes(*rs_of("F4")).size());
}

TEST_CASE("splitting examples") {
  const auto b2 = rs_of("B2");
  const auto atlas = build_atlas(b2);
  const auto& top = atlas.involution_classes.back();
  REQUIRE(top.degree == 2);
  std::set<RationalVector> roots;
  for (auto i : top.splitting.root_list()) roots.insert(b2->root(i).coords);
  CHECK(roots == std::set<RationalVector>{{1, 0}, {0, 1}});

  CHECK(split_involution(*b2, Involution::from_element(identity(b2))).roots.empty());
  for (std::size_t k = 0; k < b2->num_positive(); ++k) {
    const auto inv = Involution::from_element(reflection_element(b2, k));
    CHECK(split_involution(*b2, inv).root_list() == std::vector<std::size_t>{k});
  }
}

TEST_CASE("splittings reproduce every involution of rank <= 4") {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "A1xA1", "A1xB3"}) {
    INFO(t);
    const auto rs = rs_of(t);
    for (const auto& inv : every_involution(rs)) {
      const Cube c = split_involution(*rs, inv);
      CHECK(static_cast<int>(c.rank()) == inv.degree);
      const auto back = involution_from_cube(rs, c);
      CHECK(back.element == inv.element);
      CHECK(back.eigenspace == inv.eigenspace);
    }
  }
}

TEST_CASE("eigenspace key agrees with the nullspace computation") {
  const auto rs = rs_of("F4");
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, 3);
  for (const auto& inv : every_involution(rs)) {
    std::vector<int> word(12);
    for (auto& w : word) w = pick(rng);
    const auto x = word_element(rs, word);
    const auto moved = Involution::from_element(conjugate(inv.element, x));
    CHECK(moved.degree == inv.degree);
    CHECK(moved.eigen_roots == act_on_mask(*rs, x.images(), inv.eigen_roots));
    const auto direct = Involution::from_element(inv.element);
    CHECK(direct.eigenspace == inv.eigenspace);
    CHECK(direct.eigen_roots == inv.eigen_roots);
  }
  CHECK_THROWS_AS(Involution::from_element(word_element(rs, std::vector<int>{0, 1})), UsageError);
}

TEST_CASE("exceptional class representatives split") {
  for (const char* t : {"E6", "E7", "E8"}) {
    INFO(t);
    const auto atlas = build_atlas(rs_of(t));
    for (const auto& c : atlas.involution_classes) {
      CHECK(split_involution(*atlas.roots, c.representative) == c.splitting);
      CHECK(involution_from_cube(atlas.roots, c.splitting).element == c.representative.element);
    }
  }
}

TEST_CASE("class bookkeeping") {
  for (const char* t : {"B3", "D4", "F4", "E6", "D6", "A1xG2"}) {
    INFO(t);
    const auto atlas = build_atlas(rs_of(t));
    std::uint64_t total = 0;
    for (const auto& c : atlas.involution_classes) total += c.size;
    CHECK(total == atlas.involution_count);
    CHECK(atlas.involution_classes.front().degree == 0);
    CHECK(atlas.involution_classes.front().size == 1);
    for (std::size_t i = 1; i < atlas.involution_classes.size(); ++i) {
      const auto& a = atlas.involution_classes[i - 1];
      const auto& b = atlas.involution_classes[i];
      CHECK((a.degree < b.degree || (a.degree == b.degree && a.size <= b.size)));
    }
    for (std::size_t i = 0; i < atlas.involution_classes.size(); ++i)
      CHECK(atlas.class_index(atlas.class_id(i)) == i);
  }
}

TEST_CASE("symmetric groups: classes are products of disjoint transpositions") {
  for (std::uint64_t n = 2; n <= 8; ++n) {
    const auto atlas = build_atlas(build_root_system(TypeSpec::parse("A" + std::to_string(n - 1))));
    REQUIRE(atlas.involution_classes.size() == 1 + n / 2);
    for (std::uint64_t i = 0; i <= n / 2; ++i) {
      // n! / (2^i i! (n-2i)!)
      std::uint64_t size = 1;
      for (std::uint64_t k = 0; k < i; ++k) size *= binom(n - 2 * k, 2);
      for (std::uint64_t k = 2; k <= i; ++k) size /= k;
      CHECK(atlas.involution_classes[i].degree == static_cast<int>(i));
      CHECK(atlas.involution_classes[i].size == size);
    }
  }
}

TEST_CASE("D6 has at least two classes of degree 3") {
  const auto atlas = build_atlas(rs_of("D6"));
  int n = 0;
  for (const auto& c : atlas.involution_classes) n += c.degree == 3;
  CHECK(n >= 2);
}

TEST_CASE("brute-force agreement") {
  for (const char* t : {"A3", "B3", "C3", "G2", "D4", "A1xA2"}) {
    INFO(t);
    const auto rs = rs_of(t);
    const auto atlas = build_atlas(rs);
    const auto naive = oracle::naive_involutions(*rs);
    CHECK(atlas.involution_count == naive.involution_count);
    std::multiset<std::pair<int, std::uint64_t>> a, b;
    for (const auto& c : atlas.involution_classes) a.emplace(c.degree, c.size);
    for (const auto& c : naive.classes) b.emplace(c.degree, c.size);
    CHECK(a == b);
  }
}

TEST_CASE("thread count does not change results") {
  for (const char* t : {"E6", "F4"}) {
    const auto rs = rs_of(t);
    CHECK(atlas_json(build_atlas(rs, {1})) == atlas_json(build_atlas(rs, {3})));
    CHECK(enumerate_cubes(*rs, {1}) == enumerate_cubes(*rs, {4}));
  }
}

TEST_CASE("a splitting that cannot exist is an internal error") {
  const auto rs = rs_of("B2");
  RootMask two;
  two.set(0);
  two.set(1);  // e2 and e1 - e2 are not orthogonal: greedy stops at one root
  CHECK_THROWS_AS(split_eigen_roots(*rs, two, 2), InternalError);
}

TEST_CASE("atlas JSON round trip and cache") {
  const auto rs = rs_of("F4");
  const auto atlas = build_atlas(rs);
  const std::string j = atlas_json(atlas);
  const auto parsed = nlohmann::json::parse(j);
  CHECK(parsed["type"] == "F4");
  CHECK(parsed["group_order"] == 1152);
  CHECK(parsed["involution_classes"].size() == atlas.involution_classes.size());
  CHECK(parsed["involution_classes"][0].contains("representative_eigenspace"));
  const auto back = atlas_from_json(rs, j);
  CHECK(atlas_json(back) == j);
  CHECK(back.involution_count == atlas.involution_count);
  CHECK(back.cube_count == atlas.cube_count);

  CHECK_THROWS_AS(atlas_from_json(rs, "{"), CacheCorrupt);
  CHECK_THROWS_AS(atlas_from_json(rs_of("B4"), j), CacheCorrupt);
  auto tampered = parsed;
  tampered["involution_classes"][2]["degree"] = 3;
  CHECK_THROWS_AS(atlas_from_json(rs, tampered.dump(1) + "\n"), CacheCorrupt);
  tampered = parsed;
  tampered["involution_classes"][1]["representative_eigenspace"][0][0] = "7/1";
  CHECK_THROWS_AS(atlas_from_json(rs, tampered.dump(1) + "\n"), CacheCorrupt);

  const fs::path dir = fs::temp_directory_path() / "weylinv-test-cache";
  fs::remove_all(dir);
  std::ostringstream warn;
  CacheOptions opt{true, dir};
  CHECK(atlas_json(load_or_build_atlas(rs, opt, {}, &warn)) == j);
  CHECK(fs::exists(cache_file(dir, rs->type())));
  CHECK(atlas_json(load_or_build_atlas(rs, opt, {}, &warn)) == j);
  CHECK(warn.str().empty());
  std::ofstream(cache_file(dir, rs->type())) << "not json";
  CHECK(atlas_json(load_or_build_atlas(rs, opt, {}, &warn)) == j);
  CHECK(warn.str().find("warning") != std::string::npos);
  std::ifstream in(cache_file(dir, rs->type()));
  std::stringstream rewritten;
  rewritten << in.rdbuf();
  CHECK(rewritten.str() == j);
  fs::remove_all(dir);
}

TEST_CASE("reductions") {
  for (auto [t, index] : std::vector<std::pair<const char*, std::uint64_t>>{{"F4", 3}, {"G2", 3}, {"E6", 27}}) {
    INFO(t);
    const auto rs = rs_of(t);
    const auto sub = find_subsystem(rs, *reduction_target(rs->type()));
    REQUIRE(sub);
    const auto rep = verify_reduction(rs, *sub);
    CHECK(rep.index == index);
    CHECK(rep.index_odd);
    CHECK(rep.all_covered);
    for (const auto& e : rep.coverage) CHECK(e.witness.roots.subset_of(subsystem_positive_mask(*sub)));
  }
  CHECK_FALSE(reduction_target(TypeSpec::parse("D6")));
  // A subsystem of even index misses some cube class.
  const auto b3 = rs_of("B3");
  const auto a2 = find_subsystem(b3, TypeSpec::parse("A2"));
  REQUIRE(a2);
  const auto rep = verify_reduction(b3, *a2);
  CHECK_FALSE(rep.index_odd);
  CHECK_FALSE(rep.all_covered);
}
