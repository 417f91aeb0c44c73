#include "weyl/atlas_io.hpp"
#include "weyl/involution_atlas.hpp"
#include "weyl/simd/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace weyl;

namespace {

std::vector<std::int32_t> random_vec(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<std::int32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

struct RestoreActive {
  simd::Backend saved = simd::active().backend;
  ~RestoreActive() { simd::set_active(saved); }
};

}  // namespace

TEST_CASE("scalar kernels by hand") {
  const auto& k = simd::scalar_kernels();
  std::vector<std::int32_t> acc{1, 2, 3}, row{2, -1, 0};
  k.accumulate_weighted_squares(acc.data(), row.data(), 3, 3);
  CHECK(acc == std::vector<std::int32_t>{13, 5, 3});
  std::uint64_t mask = 0;
  std::vector<std::int32_t> b{13, 0, 3};
  k.equal_mask(acc.data(), b.data(), 3, &mask);
  CHECK(mask == 0b101);
  std::vector<std::int32_t> table{10, 20, 30}, idx{2, 0, 2}, out(3);
  k.gather(table.data(), idx.data(), out.data(), 3);
  CHECK(out == std::vector<std::int32_t>{30, 10, 30});
  CHECK(k.count_equal(acc.data(), b.data(), 3) == 2);
}

TEST_CASE("every available variant agrees with the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937 rng(7);
  for (const auto* k : simd::available_kernels()) {
    INFO(k->name);
    for (std::size_t n : {0, 1, 7, 8, 9, 63, 64, 65, 120, 128, 257}) {
      auto row = random_vec(rng, n, -3, 3);
      auto acc1 = random_vec(rng, n, -100, 100);
      auto acc2 = acc1;
      ref.accumulate_weighted_squares(acc1.data(), row.data(), 6, n);
      k->accumulate_weighted_squares(acc2.data(), row.data(), 6, n);
      CHECK(acc1 == acc2);

      auto a = random_vec(rng, n, 0, 3), b = random_vec(rng, n, 0, 3);
      std::vector<std::uint64_t> m1((n + 63) / 64 + 1, 0xdead), m2 = m1;
      ref.equal_mask(a.data(), b.data(), n, m1.data());
      k->equal_mask(a.data(), b.data(), n, m2.data());
      CHECK(m1 == m2);
      CHECK(ref.count_equal(a.data(), b.data(), n) == k->count_equal(a.data(), b.data(), n));

      auto table = random_vec(rng, 240, -1000, 1000);
      auto idx = random_vec(rng, n, 0, 239);
      std::vector<std::int32_t> o1(n), o2(n);
      ref.gather(table.data(), idx.data(), o1.data(), n);
      k->gather(table.data(), idx.data(), o2.data(), n);
      CHECK(o1 == o2);
    }
  }
}

TEST_CASE("backend selection") {
  RestoreActive restore;
  CHECK(simd::set_active(simd::Backend::Scalar));
  CHECK(simd::active().backend == simd::Backend::Scalar);
  CHECK(simd::set_active("scalar"));
  CHECK_FALSE(simd::set_active("sse9"));
  CHECK(simd::available_kernels().front()->backend == simd::Backend::Scalar);
}

TEST_CASE("atlases are identical under every backend") {
  RestoreActive restore;
  for (const char* t : {"F4", "E6", "D6"}) {
    INFO(t);
    const auto rs = build_root_system(TypeSpec::parse(t));
    std::string reference;
    for (const auto* k : simd::available_kernels()) {
      REQUIRE(simd::set_active(k->backend));
      const std::string j = atlas_json(build_atlas(rs));
      if (reference.empty()) reference = j;
      CHECK(j == reference);
    }
  }
}
