#include "geohull/simd/kernels.hpp"

#include <algorithm>

namespace geohull::simd::scalar {

void geodesic_mask(const std::uint16_t* row_u, const std::uint16_t* row_v, std::uint16_t target,
                   std::uint64_t* out, std::size_t words) {
  for (std::size_t k = 0; k < words; ++k) {
    const std::uint16_t* a = row_u + k * kLaneBlock;
    const std::uint16_t* b = row_v + k * kLaneBlock;
    std::uint64_t bits = 0;
    for (std::size_t lane = 0; lane < kLaneBlock; ++lane) {
      const std::uint32_t sum = std::uint32_t{a[lane]} + std::uint32_t{b[lane]};
      bits |= static_cast<std::uint64_t>(sum == target) << lane;
    }
    out[k] |= bits;
  }
}

std::uint16_t row_max(const std::uint16_t* row, std::size_t count) {
  std::uint16_t best = 0;
  for (std::size_t i = 0; i < count; ++i) best = std::max(best, row[i]);
  return best;
}

}  // namespace geohull::simd::scalar
