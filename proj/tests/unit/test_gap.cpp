#include "weyl/errors.hpp"
#include "weyl/gap_search.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace weyl;

namespace {

RootSystemPtr rs_of(const char* t) { return build_root_system(TypeSpec::parse(t)); }

}  // namespace

TEST_CASE("catalogue contents") {
  const auto rs = rs_of("E8");
  GapBudget b;
  b.pairs = false;
  const auto cat = build_catalogue(rs, b);
  std::vector<std::string> names;
  for (const auto& r : cat.entries) names.push_back(r->descriptor());
  CHECK(names == std::vector<std::string>{"trivial", "sign", "cox", "lambda2", "lambda3", "roots", "conj(D8)"});
  CHECK_FALSE(cat.partial);

  b.pairs = true;
  const auto full = build_catalogue(rs, b);
  CHECK(full.entries.size() == 7 + 2 * 28);

  b.max_catalogue = 10;
  const auto capped = build_catalogue(rs, b);
  CHECK(capped.entries.size() == 10);
  CHECK(capped.partial);

  b = GapBudget{};
  b.conjugate_subsystems = {TypeSpec::parse("A8"), TypeSpec::parse("D8")};
  b.pairs = false;
  CHECK(build_catalogue(rs, b).entries.size() == 8);
  b.conjugate_subsystems = {TypeSpec::parse("A2")};
  CHECK_THROWS_AS(build_catalogue(rs_of("B2"), b), UsageError);
}

TEST_CASE("search_gap requires equal degrees") {
  const auto atlas = build_atlas(rs_of("D6"));
  const auto cat = build_catalogue(atlas.roots, GapBudget{});
  CHECK_THROWS_AS(search_gap(atlas, 1, 2, cat), UsageError);
}

TEST_CASE("hard cases: the pair, the target and verified hits") {
  for (auto [t, n] : std::vector<std::pair<const char*, int>>{{"D6", 3}, {"E8", 4}}) {
    INFO(t);
    const auto atlas = build_atlas(rs_of(t));
    const auto cat = build_catalogue(atlas.roots, GapBudget{});
    const auto rep = analyse_hard_case(atlas, n, cat);
    CHECK(rep.separation.classes.size() >= 2);
    CHECK_FALSE(rep.separation.spans());
    CHECK_FALSE(rep.separation.unseparated.empty());
    REQUIRE_FALSE(rep.findings.empty());
    for (const auto& f : rep.findings) {
      CHECK(f.target == (std::int64_t{1} << n));
      const auto& a = atlas.involution_classes[atlas.class_index(f.pair[0])];
      const auto& b = atlas.involution_classes[atlas.class_index(f.pair[1])];
      for (const auto& h : f.hits) {
        const auto rho = parse_representation(atlas.roots, h.rep);
        CHECK(character_gap(*rho, a, b) == h.gap);
        CHECK((h.gap == f.target || h.gap == -f.target));
      }
      const auto j = nlohmann::json::parse(f.json());
      CHECK(j["target"] == f.target);
      CHECK(j["pair"].size() == 2);
      CHECK(j["catalogue_size"] == cat.entries.size());
      CHECK(f.json() == search_gap(atlas, atlas.class_index(f.pair[0]), atlas.class_index(f.pair[1]), cat).json());
    }
  }
}

TEST_CASE("E8 degree 4: the permutation character on roots separates the pair") {
  const auto atlas = build_atlas(rs_of("E8"));
  const auto cat = build_catalogue(atlas.roots, GapBudget{});
  const auto f = search_gap(atlas, atlas.class_index("4a"), atlas.class_index("4b"), cat);
  bool roots = false;
  for (const auto& h : f.hits) roots = roots || h.rep == "roots";
  CHECK(roots);
}

TEST_CASE("Stiefel-Whitney separation in B3") {
  const auto atlas = build_atlas(rs_of("B3"));
  const auto cat = build_catalogue(atlas.roots, GapBudget{});

  // Every base entry has determinant -1 on both reflection classes, so w1
  // cannot tell a long reflection from a short one.
  const auto deg1 = sw_separation(atlas, 1, cat.base);
  CHECK_FALSE(deg1.spans());
  CHECK(deg1.rank == 1);
  CHECK(deg1.unseparated.size() == 1);

  // The linear character that is -1 on long reflections only: the parity of
  // long positive roots sent negative.
  const auto& rs = atlas.roots;
  int long_norm = 0;
  for (std::size_t i = 0; i < rs->num_positive(); ++i) long_norm = std::max(long_norm, rs->norm(i));
  auto eps_long = Representation::custom(rs, "eps_long", 1, [rs, long_norm](const GroupElement& g) {
    int flips = 0;
    for (std::size_t i = 0; i < rs->num_positive(); ++i)
      flips += rs->norm(i) == long_norm && !rs->is_positive(g[i]);
    return Rational(flips % 2 == 0 ? 1 : -1);
  });
  auto extended = cat.base;
  extended.push_back(eps_long);
  const auto fixed = sw_separation(atlas, 1, extended);
  CHECK(fixed.spans());
  CHECK(fixed.unseparated.empty());

  const auto deg2 = sw_separation(atlas, 2, cat.base);
  CHECK(deg2.spans());
  CHECK(deg2.unseparated.empty());
}

TEST_CASE("hard degrees") {
  CHECK(hard_degrees(TypeSpec::parse("D6")) == std::vector<int>{3});
  CHECK(hard_degrees(TypeSpec::parse("D8")) == std::vector<int>{4});
  CHECK(hard_degrees(TypeSpec::parse("E7")) == std::vector<int>{3, 4});
  CHECK(hard_degrees(TypeSpec::parse("E8")) == std::vector<int>{4});
  CHECK(hard_degrees(TypeSpec::parse("D5")).empty());
  CHECK(hard_degrees(TypeSpec::parse("E6")).empty());
}
