#include "weyl/simd/kernels.hpp"

#include <arm_neon.h>

#include <algorithm>

namespace weyl::simd {

namespace detail {
const Kernels& neon_kernel_table();
}

namespace {

void accumulate_weighted_squares(std::int32_t* acc, const std::int32_t* row, std::int32_t weight,
                                 std::size_t n) {
  const int32x4_t w = vdupq_n_s32(weight);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    int32x4_t r = vld1q_s32(row + j);
    int32x4_t a = vld1q_s32(acc + j);
    a = vmlaq_s32(a, vmulq_s32(r, r), w);
    vst1q_s32(acc + j, a);
  }
  for (; j < n; ++j) acc[j] += weight * row[j] * row[j];
}

void equal_mask(const std::int32_t* a, const std::int32_t* b, std::size_t n, std::uint64_t* out) {
  std::fill(out, out + (n + 63) / 64, std::uint64_t{0});
  static const std::uint32_t lane_bits[4] = {1, 2, 4, 8};
  const uint32x4_t weights = vld1q_u32(lane_bits);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    uint32x4_t eq = vceqq_s32(vld1q_s32(a + j), vld1q_s32(b + j));
    std::uint64_t bits = vaddvq_u32(vandq_u32(eq, weights));
    out[j >> 6] |= bits << (j & 63);
  }
  for (; j < n; ++j)
    if (a[j] == b[j]) out[j >> 6] |= std::uint64_t{1} << (j & 63);
}

// NEON has no gather; the scalar loop is what the compiler would emit anyway.
void gather(const std::int32_t* table, const std::int32_t* index, std::int32_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = table[index[i]];
}

std::size_t count_equal(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  uint32x4_t total = vdupq_n_u32(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t eq = vceqq_s32(vld1q_s32(a + i), vld1q_s32(b + i));
    total = vsubq_u32(total, eq);  // true lanes are all ones, i.e. -1
  }
  std::size_t c = vaddvq_u32(total);
  for (; i < n; ++i) c += a[i] == b[i];
  return c;
}

}  // namespace

const Kernels& detail::neon_kernel_table() {
  static const Kernels k{Backend::Neon, "neon", accumulate_weighted_squares, equal_mask, gather, count_equal};
  return k;
}

}  // namespace weyl::simd
