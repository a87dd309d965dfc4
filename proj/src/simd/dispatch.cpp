#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "geohull/simd/kernels.hpp"

namespace geohull::simd {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::geodesic_mask, &scalar::row_max};
#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::geodesic_mask, &avx2::row_max};
#endif
#if defined(__aarch64__)
constexpr KernelTable kNeon{Isa::Neon, &neon::geodesic_mask, &neon::row_max};
#endif

bool host_has_avx2() noexcept {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{&table_for(detected_isa())};
  return slot;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool is_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return host_has_avx2();
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() noexcept {
  if (const char* env = std::getenv("GEOHULL_SIMD")) {
    const std::string requested(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (requested == to_string(isa) && is_supported(isa)) return isa;
    }
  }
  if (is_supported(Isa::Avx2)) return Isa::Avx2;
  if (is_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const KernelTable& table_for(Isa isa) {
  if (!is_supported(isa)) {
    throw std::invalid_argument("SIMD variant not supported on this host: " +
                                std::string(to_string(isa)));
  }
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::Avx2:
      return kAvx2;
#endif
#if defined(__aarch64__)
    case Isa::Neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

const KernelTable& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

void set_active(Isa isa) { active_slot().store(&table_for(isa), std::memory_order_release); }

}  // namespace geohull::simd
