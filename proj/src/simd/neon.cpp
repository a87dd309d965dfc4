#include "geohull/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>

namespace geohull::simd::neon {

namespace {

// 16 lanes -> 16-bit mask of lanes whose sum equals target.
inline std::uint32_t equal_sum_bits(const std::uint16_t* a, const std::uint16_t* b,
                                    uint16x8_t target) {
  static const std::uint8_t kWeights[8] = {1, 2, 4, 8, 16, 32, 64, 128};
  const uint8x8_t weights = vld1_u8(kWeights);
  const uint16x8_t eq_lo = vceqq_u16(vaddq_u16(vld1q_u16(a), vld1q_u16(b)), target);
  const uint16x8_t eq_hi = vceqq_u16(vaddq_u16(vld1q_u16(a + 8), vld1q_u16(b + 8)), target);
  const std::uint32_t lo = vaddv_u8(vand_u8(vmovn_u16(eq_lo), weights));
  const std::uint32_t hi = vaddv_u8(vand_u8(vmovn_u16(eq_hi), weights));
  return lo | (hi << 8);
}

}  // namespace

void geodesic_mask(const std::uint16_t* row_u, const std::uint16_t* row_v, std::uint16_t target,
                   std::uint64_t* out, std::size_t words) {
  const uint16x8_t t = vdupq_n_u16(target);
  for (std::size_t k = 0; k < words; ++k) {
    std::uint64_t bits = 0;
    for (std::size_t q = 0; q < 4; ++q) {
      const std::size_t offset = k * kLaneBlock + q * 16;
      bits |= static_cast<std::uint64_t>(equal_sum_bits(row_u + offset, row_v + offset, t))
              << (q * 16);
    }
    out[k] |= bits;
  }
}

std::uint16_t row_max(const std::uint16_t* row, std::size_t count) {
  std::size_t i = 0;
  uint16x8_t acc = vdupq_n_u16(0);
  for (; i + 8 <= count; i += 8) acc = vmaxq_u16(acc, vld1q_u16(row + i));
  std::uint16_t best = vmaxvq_u16(acc);
  for (; i < count; ++i) best = std::max(best, row[i]);
  return best;
}

}  // namespace geohull::simd::neon

#endif
