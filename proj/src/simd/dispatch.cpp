#include "weyl/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace weyl::simd {

namespace detail {
#ifdef WEYL_HAVE_AVX2
const Kernels& avx2_kernel_table();
#endif
#ifdef WEYL_HAVE_NEON
const Kernels& neon_kernel_table();
#endif
}  // namespace detail

const Kernels* avx2_kernels() {
#ifdef WEYL_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels* neon_kernels() {
#ifdef WEYL_HAVE_NEON
  return &detail::neon_kernel_table();  // mandatory on aarch64
#else
  return nullptr;
#endif
}

std::vector<const Kernels*> available_kernels() {
  std::vector<const Kernels*> out{&scalar_kernels()};
  if (auto* k = avx2_kernels()) out.push_back(k);
  if (auto* k = neon_kernels()) out.push_back(k);
  return out;
}

namespace {

const Kernels* by_name(std::string_view name) {
  for (const auto* k : available_kernels())
    if (name == k->name) return k;
  return nullptr;
}

const Kernels* initial_choice() {
  if (const char* env = std::getenv("WEYL_SIMD"))
    if (const auto* k = by_name(env)) return k;
  auto all = available_kernels();
  return all.back();
}

std::atomic<const Kernels*>& slot() {
  static std::atomic<const Kernels*> current{initial_choice()};
  return current;
}

}  // namespace

const Kernels& active() { return *slot().load(std::memory_order_acquire); }

bool set_active(Backend backend) {
  for (const auto* k : available_kernels())
    if (k->backend == backend) {
      slot().store(k, std::memory_order_release);
      return true;
    }
  return false;
}

bool set_active(std::string_view name) {
  if (const auto* k = by_name(name)) {
    slot().store(k, std::memory_order_release);
    return true;
  }
  return false;
}

}  // namespace weyl::simd
