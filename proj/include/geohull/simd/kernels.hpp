#pragma once

// Data-parallel inner loops behind the distance and interval computations.
//
// Distance rows are stored as uint16_t, padded to a multiple of kLaneBlock
// entries with kDistancePad. Output masks are little-endian bit vectors of
// 64-bit words: bit (w % 64) of word (w / 64) stands for vertex w.
//
// Every kernel has a scalar reference implementation; vector variants must
// produce bit-identical results and are selected once at runtime.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace geohull::simd {

inline constexpr std::size_t kLaneBlock = 64;
inline constexpr std::uint16_t kDistancePad = 0x7fff;
// Largest distance representable in a row; also the largest supported order.
inline constexpr std::uint16_t kMaxDistance = 0x7ffe;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

// out[k] |= bit w set iff row_u[w] + row_v[w] == target, for w in [64k, 64k+64).
using GeodesicMaskFn = void (*)(const std::uint16_t* row_u, const std::uint16_t* row_v,
                                std::uint16_t target, std::uint64_t* out, std::size_t words);
// Maximum of row[0..count). Returns 0 for count == 0.
using RowMaxFn = std::uint16_t (*)(const std::uint16_t* row, std::size_t count);

struct KernelTable {
  Isa isa;
  GeodesicMaskFn geodesic_mask;
  RowMaxFn row_max;
};

namespace scalar {
void geodesic_mask(const std::uint16_t* row_u, const std::uint16_t* row_v, std::uint16_t target,
                   std::uint64_t* out, std::size_t words);
std::uint16_t row_max(const std::uint16_t* row, std::size_t count);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void geodesic_mask(const std::uint16_t* row_u, const std::uint16_t* row_v, std::uint16_t target,
                   std::uint64_t* out, std::size_t words);
std::uint16_t row_max(const std::uint16_t* row, std::size_t count);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void geodesic_mask(const std::uint16_t* row_u, const std::uint16_t* row_v, std::uint16_t target,
                   std::uint64_t* out, std::size_t words);
std::uint16_t row_max(const std::uint16_t* row, std::size_t count);
}  // namespace neon
#endif

// True when this build contains the variant and the host CPU can run it.
bool is_supported(Isa isa) noexcept;

// Best supported variant. GEOHULL_SIMD=scalar|avx2|neon in the environment
// overrides the choice when the requested variant is supported.
Isa detected_isa() noexcept;

const KernelTable& table_for(Isa isa);

// The table used by the library. Initialized from detected_isa().
const KernelTable& active() noexcept;

// Switches the library-wide kernels; throws std::invalid_argument when the
// variant is not supported on this host.
void set_active(Isa isa);

}  // namespace geohull::simd
