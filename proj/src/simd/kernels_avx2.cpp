#include "weyl/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <bit>

namespace weyl::simd {

namespace detail {
const Kernels& avx2_kernel_table();
}

namespace {

void accumulate_weighted_squares(std::int32_t* acc, const std::int32_t* row, std::int32_t weight,
                                 std::size_t n) {
  const __m256i w = _mm256_set1_epi32(weight);
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j));
    __m256i sq = _mm256_mullo_epi32(r, r);
    a = _mm256_add_epi32(a, _mm256_mullo_epi32(sq, w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + j), a);
  }
  for (; j < n; ++j) acc[j] += weight * row[j] * row[j];
}

void equal_mask(const std::int32_t* a, const std::int32_t* b, std::size_t n, std::uint64_t* out) {
  std::fill(out, out + (n + 63) / 64, std::uint64_t{0});
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
    auto bits = static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
    out[j >> 6] |= std::uint64_t{bits} << (j & 63);
  }
  for (; j < n; ++j)
    if (a[j] == b[j]) out[j >> 6] |= std::uint64_t{1} << (j & 63);
}

void gather(const std::int32_t* table, const std::int32_t* index, std::int32_t* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(index + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_i32gather_epi32(table, idx, 4));
  }
  for (; i < n; ++i) out[i] = table[index[i]];
}

std::size_t count_equal(const std::int32_t* a, const std::int32_t* b, std::size_t n) {
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    auto bits = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
    c += static_cast<std::size_t>(std::popcount(bits));
  }
  for (; i < n; ++i) c += a[i] == b[i];
  return c;
}

}  // namespace

const Kernels& detail::avx2_kernel_table() {
  static const Kernels k{Backend::Avx2, "avx2", accumulate_weighted_squares, equal_mask, gather, count_equal};
  return k;
}

}  // namespace weyl::simd
