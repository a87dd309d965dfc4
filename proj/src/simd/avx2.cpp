// Compiled with -mavx2; only reached through the dispatcher after a CPU check.
#include "geohull/simd/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace geohull::simd::avx2 {

namespace {

// 32 lanes starting at a/b -> 32-bit mask of lanes whose sum equals target.
inline std::uint32_t equal_sum_bits(const std::uint16_t* a, const std::uint16_t* b, __m256i target) {
  const __m256i lo = _mm256_add_epi16(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a)),
                                      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b)));
  const __m256i hi =
      _mm256_add_epi16(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 16)),
                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 16)));
  const __m256i eq_lo = _mm256_cmpeq_epi16(lo, target);
  const __m256i eq_hi = _mm256_cmpeq_epi16(hi, target);
  // packs interleaves 128-bit lanes: [lo0 hi0 lo1 hi1] -> restore lane order.
  const __m256i packed = _mm256_permute4x64_epi64(_mm256_packs_epi16(eq_lo, eq_hi), 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
}

}  // namespace

void geodesic_mask(const std::uint16_t* row_u, const std::uint16_t* row_v, std::uint16_t target,
                   std::uint64_t* out, std::size_t words) {
  // Row entries are at most kDistancePad, so 16-bit sums never wrap.
  const __m256i t = _mm256_set1_epi16(static_cast<short>(target));
  for (std::size_t k = 0; k < words; ++k) {
    const std::uint16_t* a = row_u + k * kLaneBlock;
    const std::uint16_t* b = row_v + k * kLaneBlock;
    const std::uint64_t low = equal_sum_bits(a, b, t);
    const std::uint64_t high = equal_sum_bits(a + 32, b + 32, t);
    out[k] |= low | (high << 32);
  }
}

std::uint16_t row_max(const std::uint16_t* row, std::size_t count) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 16 <= count; i += 16) {
    acc = _mm256_max_epu16(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i)));
  }
  __m128i half = _mm_max_epu16(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
  half = _mm_max_epu16(half, _mm_srli_si128(half, 8));
  half = _mm_max_epu16(half, _mm_srli_si128(half, 4));
  half = _mm_max_epu16(half, _mm_srli_si128(half, 2));
  auto best = static_cast<std::uint16_t>(_mm_extract_epi16(half, 0));
  for (; i < count; ++i) best = std::max(best, row[i]);
  return best;
}

}  // namespace geohull::simd::avx2
