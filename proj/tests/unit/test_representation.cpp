#include "weyl/errors.hpp"
#include "weyl/invariant_module.hpp"
#include "weyl/representation.hpp"

#include <doctest.h>

#include <random>

using namespace weyl;

namespace {

RootSystemPtr rs_of(const char* t) { return build_root_system(TypeSpec::parse(t)); }

GroupElement random_element(const RootSystemPtr& rs, std::mt19937& rng, int len = 15) {
  std::uniform_int_distribution<int> pick(0, rs->rank() - 1);
  std::vector<int> w(static_cast<std::size_t>(len));
  for (auto& x : w) x = pick(rng);
  return word_element(rs, w);
}

Rational minors(const RationalMatrix& m, int k) {
  const std::size_t n = m.rows();
  Rational total(0);
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (std::popcount(s) != k) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1U) idx.push_back(i);
    RationalMatrix sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
    total += idx.empty() ? Rational(1) : sub.determinant();
  }
  return total;
}

}  // namespace

TEST_CASE("basic characters") {
  const auto rs = rs_of("B3");
  const auto s = reflection_element(rs, 4);
  const auto e = identity(rs);
  CHECK(Representation::trivial(rs)->character(s) == 1);
  CHECK(Representation::sign(rs)->character(s) == -1);
  CHECK(Representation::sign(rs)->character(compose(s, reflection_element(rs, 1))) == 1);
  CHECK(Representation::coxeter(rs)->character(s) == 1);
  CHECK(Representation::coxeter(rs)->character(e) == 3);
  CHECK(Representation::root_permutation(rs)->character(e) == 18);
  CHECK(Representation::root_permutation(rs)->dimension() == 18);
}

TEST_CASE("exterior square of the Coxeter representation of B2 on a reflection") {
  const auto rs = rs_of("B2");
  const auto l2 = Representation::exterior_power(rs, 2);
  CHECK(l2->dimension() == 1);
  for (std::size_t k = 0; k < rs->num_positive(); ++k) CHECK(l2->character(reflection_element(rs, k)) == -1);
}

TEST_CASE("exterior powers agree with principal minors on arbitrary elements") {
  std::mt19937 rng(5);
  for (const char* t : {"B3", "F4", "A4"}) {
    const auto rs = rs_of(t);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_element(rs, rng);
      const auto m = element_matrix(g);
      for (int k = 0; k <= rs->rank(); ++k) CHECK(Representation::exterior_power(rs, k)->character(g) == minors(m, k));
    }
  }
  CHECK(exterior_trace_on_involution(3, 1, 2) == 0);  // (1+x)^3 (1-x): x^2 coefficient 3 - 3
  CHECK(exterior_trace_on_involution(1, 1, 1) == 0);
  CHECK(exterior_trace_on_involution(0, 2, 2) == 1);
  CHECK_THROWS_AS(Representation::exterior_power(rs_of("A2"), 3), UsageError);
}

TEST_CASE("sums and tensor products") {
  const auto rs = rs_of("F4");
  const auto a = Representation::coxeter(rs);
  const auto b = Representation::root_permutation(rs);
  const auto sum = Representation::direct_sum(a, b);
  const auto ten = Representation::tensor_product(a, b);
  CHECK(sum->dimension() == 52);
  CHECK(ten->dimension() == 192);
  std::mt19937 rng(9);
  for (int i = 0; i < 10; ++i) {
    const auto g = random_element(rs, rng);
    CHECK(sum->character(g) == a->character(g) + b->character(g));
    CHECK(ten->character(g) == a->character(g) * b->character(g));
  }
  CHECK(sum->descriptor() == "sum(cox,roots)");
  CHECK(ten->descriptor() == "tensor(cox,roots)");
}

TEST_CASE("permutation representation on subsystem conjugates") {
  const auto e8 = rs_of("E8");
  const auto d8 = find_subsystem(e8, TypeSpec::parse("D8"));
  REQUIRE(d8);
  const auto rho = Representation::conjugate_permutation(*d8);
  CHECK(rho->dimension() == 135);
  CHECK(rho->character(identity(e8)) == 135);
  CHECK(rho->descriptor() == "conj(D8)");
  const auto f4 = rs_of("F4");
  const auto b4 = Representation::conjugate_permutation(*find_subsystem(f4, TypeSpec::parse("B4")));
  CHECK(b4->dimension() == 3);
  // A permutation character counts fixed points: never negative, at most the degree.
  std::mt19937 rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto c = b4->character(random_element(f4, rng));
    CHECK(c >= 0);
    CHECK(c <= 3);
  }
}

TEST_CASE("parsing representation descriptors") {
  const auto rs = rs_of("E7");
  for (const char* d : {"trivial", "sign", "cox", "roots", "lambda2", "conj(A1xD6)", "sum(cox,lambda3)",
                        "tensor(sign,sum(cox,roots))"}) {
    INFO(d);
    CHECK(parse_representation(rs, d)->descriptor() == d);
  }
  CHECK(parse_representation(rs, "COX")->descriptor() == "cox");
  CHECK(parse_representation(rs, "1")->descriptor() == "trivial");
  CHECK(parse_representation(rs, "det")->descriptor() == "sign");
  for (const char* bad : {"", "lambda9", "lambda", "conj(E8)", "sum(cox)", "tensor(cox,", "spin", "conj(A1xQ2)"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_representation(rs, bad), UsageError);
  }
}

TEST_CASE("a trace oracle that is not a representation is reported") {
  const auto rs = rs_of("B2");
  const auto bogus = Representation::custom(rs, "bogus", 1, [](const GroupElement& g) {
    return g.is_identity() ? Rational(1) : Rational(0);
  });
  const auto atlas = build_atlas(rs);
  const auto e = InvariantExpr::sw(bogus, 1);
  CHECK_THROWS_AS(pairing(e, atlas, 1), UsageError);
  const auto half = Representation::custom(rs, "half", 1, [](const GroupElement&) { return Rational(1, 2); });
  CHECK_THROWS_AS(pairing(InvariantExpr::sw(half, 1), atlas, 1), UsageError);
}

TEST_CASE("character gaps and lengths") {
  const auto atlas = build_atlas(rs_of("B2"));
  const auto& rs = atlas.roots;
  const auto cox = Representation::coxeter(rs);
  // Reflections: trace 0; -1: trace -2.
  CHECK(character_gap(*cox, atlas.involution_classes[1], atlas.involution_classes.back()) == 2);
  CHECK(element_length(identity(rs)) == 0);
  CHECK(element_length(reflection_element(rs, rs->simple_root(0))) == 1);
  CHECK(element_length(atlas.involution_classes.back().representative.element) == 4);
}
