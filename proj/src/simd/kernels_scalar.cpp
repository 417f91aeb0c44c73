#include "weyl/simd/kernels.hpp"

#include <algorithm>

namespace weyl::simd {
namespace {

void accumulate_weighted_squares(std::int32_t* acc, const std::int32_t* row, std::int32_t weight,
                                 std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) acc[j] += weight * row[j] * row[j];
}

void equal_mask(const std::int32_t* a, const std::int32_t* b, std::size_t n, std::uint64_t* out) {
  std::fill(out, out + (n + 63) / 64, std::uint64_t{0});
  for (std::size_t j = 0; j < n; ++j)
    if (a[j] == b[j]) out[j >> 6] |= std::uint64_t{1} << (j & 63);
}

void gather(const std::int32_t* table, const std::int32_t* index, std::int32_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = table[index[i]];
}

std::size_t count_equal(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += a[i] == b[i];
  return c;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Backend::Scalar, "scalar", accumulate_weighted_squares, equal_mask, gather,
                         count_equal};
  return k;
}

}  // namespace weyl::simd
