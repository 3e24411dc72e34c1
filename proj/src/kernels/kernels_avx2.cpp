// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <limits>

#include "kmp/kernels.hpp"

namespace kmp::kernels::detail {

namespace {

// Low 32 bits of each int64 lane of a and b, packed a0..a3 b0..b3.
inline __m256i pack_low32(__m256i a, __m256i b) {
  const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
  const __m256i pa = _mm256_permutevar8x32_epi32(a, idx);
  const __m256i pb = _mm256_permutevar8x32_epi32(b, idx);
  return _mm256_permute2x128_si256(pa, pb, 0x20);
}

inline std::uint64_t block_mask(__m256i cmp) {
  return static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(cmp)));
}

}  // namespace

ExpandResult expand_avx2(const Coord* x, const Coord* columns, int rank, std::size_t stride,
                         bool only_ascents, Coord* out) {
  ExpandResult res;
  const __m256i zero = _mm256_setzero_si256();
  const __m256i hi = _mm256_set1_epi64x(std::numeric_limits<Coord>::max());
  const __m256i lo = _mm256_set1_epi64x(std::numeric_limits<Coord>::min());

  // Sign masks, one 8-lane block at a time.
  for (std::size_t b = 0; b < stride; b += kLaneBlock) {
    const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + b));
    res.ascents |= block_mask(_mm256_cmpgt_epi32(xv, zero)) << b;
    res.zeros |= block_mask(_mm256_cmpeq_epi32(xv, zero)) << b;
  }
  const std::uint64_t live = rank >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank) - 1;
  res.ascents &= live;
  res.zeros &= live;

  __m256i bad = zero;
  for (int g = 0; g < rank; ++g) {
    if (only_ascents && !((res.ascents >> g) & 1U)) continue;
    const __m256i xg = _mm256_set1_epi64x(x[g]);
    const Coord* col = columns + static_cast<std::size_t>(g) * stride;
    Coord* dst = out + static_cast<std::size_t>(g) * stride;
    for (std::size_t b = 0; b < stride; b += kLaneBlock) {
      const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + b));
      const __m256i cv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + b));
      const __m256i x_lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(xv));
      const __m256i x_hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(xv, 1));
      const __m256i c_lo = _mm256_cvtepi32_epi64(_mm256_castsi256_si128(cv));
      const __m256i c_hi = _mm256_cvtepi32_epi64(_mm256_extracti128_si256(cv, 1));
      // Signed 32x32 -> 64 products of the low halves.
      const __m256i r_lo = _mm256_sub_epi64(x_lo, _mm256_mul_epi32(c_lo, xg));
      const __m256i r_hi = _mm256_sub_epi64(x_hi, _mm256_mul_epi32(c_hi, xg));
      bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(r_lo, hi));
      bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(lo, r_lo));
      bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(r_hi, hi));
      bad = _mm256_or_si256(bad, _mm256_cmpgt_epi64(lo, r_hi));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + b), pack_low32(r_lo, r_hi));
    }
  }
  res.overflow = !_mm256_testz_si256(bad, bad);
  return res;
}

}  // namespace kmp::kernels::detail
