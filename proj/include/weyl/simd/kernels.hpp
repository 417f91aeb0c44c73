#pragma once

// Data-parallel inner loops of the atlas. Every entry has a scalar reference
// implementation; vector variants must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace weyl::simd {

enum class Backend { Scalar, Avx2, Neon };

struct Kernels {
  Backend backend;
  const char* name;

  /// acc[j] += weight * row[j]^2 for j < n.
  void (*accumulate_weighted_squares)(std::int32_t* acc, const std::int32_t* row, std::int32_t weight,
                                      std::size_t n);
  /// Bit j of out (64-bit words, ceil(n/64) of them) set iff a[j] == b[j].
  void (*equal_mask)(const std::int32_t* a, const std::int32_t* b, std::size_t n, std::uint64_t* out);
  /// out[i] = table[index[i]] for i < n.
  void (*gather)(const std::int32_t* table, const std::int32_t* index, std::int32_t* out, std::size_t n);
  /// Number of i < n with a[i] == b[i].
  std::size_t (*count_equal)(const std::int32_t* a, const std::int32_t* b, std::size_t n);
};

const Kernels& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

/// All variants usable on this machine, scalar first.
std::vector<const Kernels*> available_kernels();

/// The kernels used by the library. Picks the widest supported variant on
/// first use; the environment variable WEYL_SIMD=scalar|avx2|neon overrides.
const Kernels& active();
/// Returns false if the backend is unavailable here.
bool set_active(Backend backend);
bool set_active(std::string_view name);

}  // namespace weyl::simd
