#include "weyl/base_poly.hpp"
#include "weyl/cube_algebra.hpp"
#include "weyl/errors.hpp"

#include <doctest.h>

#include <random>

using namespace weyl;

TEST_CASE("base polynomials print with descending exponents") {
  CHECK(BasePoly().str() == "0");
  CHECK(BasePoly::one().str() == "1");
  CHECK(BasePoly::t().str() == "t");
  CHECK((BasePoly::t(2) + BasePoly::one()).str() == "t^2+1");
  CHECK((BasePoly::t(5) + BasePoly::t(1)).str() == "t^5+t");
  for (const char* s : {"0", "1", "t", "t^2+1", "t^7+t^3+t+1"}) CHECK(BasePoly::parse(s).str() == s);
  CHECK_THROWS_AS(BasePoly::parse("t^"), UsageError);
  CHECK_THROWS_AS(BasePoly::parse("x"), UsageError);
}

TEST_CASE("base polynomial arithmetic over F2") {
  const BasePoly a = BasePoly::t() + BasePoly::one();
  CHECK(a * a == BasePoly::t(2) + BasePoly::one());
  CHECK(a + a == BasePoly());
  CHECK(BasePoly::t(3).degree() == 3);
  CHECK(BasePoly().degree() < 0);
  CHECK(BasePoly::t(4).is_monomial());
  CHECK_FALSE(a.is_monomial());
  CHECK(a.at_zero());
  CHECK_FALSE(BasePoly::t().at_zero());
  CHECK_THROWS((void)(BasePoly::t(40) * BasePoly::t(40)));
}

TEST_CASE("square of 1 + x1 + x2") {
  auto a = CubeClassElement::one(2);
  a += CubeClassElement::generator(2, 0);
  a += CubeClassElement::generator(2, 1);
  auto want = CubeClassElement::one(2);
  want += CubeClassElement::generator(2, 0).times_t(1);
  want += CubeClassElement::generator(2, 1).times_t(1);
  CHECK(cube_mul(a, a) == want);
  CHECK(cube_mul(a, a).str() == "1 + t*x1 + t*x2");
}

TEST_CASE("x_i^2 = t x_i and alpha_I alpha_J = t^|I n J| alpha_{I u J}") {
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i < n; ++i) {
      const auto x = CubeClassElement::generator(n, i);
      CHECK(cube_mul(x, x) == x.times_t(1));
    }
  const int n = 4;
  for (unsigned I = 0; I < 16; ++I)
    for (unsigned J = 0; J < 16; ++J) {
      const auto p = cube_mul(CubeClassElement::basis(n, I), CubeClassElement::basis(n, J));
      CHECK(p == CubeClassElement::basis(n, I | J, BasePoly::t(std::popcount(I & J))));
    }
}

TEST_CASE("Frobenius, associativity and commutativity on random elements") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 25; ++trial) {
      auto rnd = [&] {
        CubeClassElement x(n);
        for (unsigned s = 0; s < (1U << n); ++s) x.set(s, BasePoly(rng() & 0xf));
        return x;
      };
      const auto a = rnd(), b = rnd(), c = rnd();
      CHECK(cube_mul(a + b, a + b) == cube_mul(a, a) + cube_mul(b, b));
      CHECK(cube_mul(a, b) == cube_mul(b, a));
      CHECK(cube_mul(cube_mul(a, b), c) == cube_mul(a, cube_mul(b, c)));
    }
}

TEST_CASE("degrees, components and truncation") {
  auto a = CubeClassElement::one(3);
  a += CubeClassElement::basis(3, 0b011, BasePoly::t());
  a += CubeClassElement::generator(3, 2);
  CHECK_FALSE(a.is_homogeneous());
  CHECK(a.component(3) == CubeClassElement::basis(3, 0b011, BasePoly::t()));
  CHECK(a.component(1) == CubeClassElement::generator(3, 2));
  CHECK(a.truncated(1) == CubeClassElement::one(3) + CubeClassElement::generator(3, 2));
  CHECK(cube_mul(a, a, 2) == cube_mul(a, a).truncated(2));
  CHECK(top_coefficient(CubeClassElement::basis(3, 7, BasePoly::t(2))) == BasePoly::t(2));
  CHECK_THROWS_AS(cube_mul(CubeClassElement::one(2), CubeClassElement::one(3)), UsageError);
}

TEST_CASE("multiplying by 1 + p L") {
  const int n = 3;
  auto a = CubeClassElement::one(n);
  a += CubeClassElement::generator(n, 1);
  const unsigned S = 0b101;
  const BasePoly p = BasePoly::t() + BasePoly::one();
  auto lin = CubeClassElement::one(n);
  lin += CubeClassElement::generator(n, 0);
  lin += CubeClassElement::generator(n, 2);
  // 1 + p*L as an element
  auto one_plus = CubeClassElement::one(n);
  for (int i : {0, 2}) one_plus += CubeClassElement::basis(n, 1U << i, p);
  CHECK(mul_one_plus_linear(a, S, p) == cube_mul(a, one_plus));
  CHECK(mul_one_plus_linear(a, S, p, 2) == cube_mul(a, one_plus).truncated(2));
}
