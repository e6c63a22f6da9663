// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>
#include <cstring>

#include "cointersect/kernels.hpp"

namespace coint::kernels::avx2 {

std::size_t count_row_matches(std::span<const std::uint64_t> a_masks, std::span<const std::uint64_t> b_masks,
                              std::span<const std::uint8_t> adj_row, std::uint64_t qa, std::uint64_t qb) {
  const std::size_t n = adj_row.size();
  const __m256i va_q = _mm256_set1_epi64x(static_cast<long long>(qa));
  const __m256i vb_q = _mm256_set1_epi64x(static_cast<long long>(qb));
  const __m256i zero = _mm256_setzero_si256();

  std::size_t count = 0;
  std::size_t v = 0;
  for (; v + 4 <= n; v += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a_masks.data() + v));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b_masks.data() + v));
    // All-ones lanes where the A (resp. B) intersection is empty.
    const __m256i a_empty = _mm256_cmpeq_epi64(_mm256_and_si256(va, va_q), zero);
    const __m256i b_empty = _mm256_cmpeq_epi64(_mm256_and_si256(vb, vb_q), zero);
    const __m256i unlinked = _mm256_or_si256(a_empty, b_empty);

    std::uint32_t adj4 = 0;
    std::memcpy(&adj4, adj_row.data() + v, sizeof(adj4));
    const __m256i adj = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(static_cast<int>(adj4)));
    const __m256i non_edge = _mm256_cmpeq_epi64(adj, zero);

    const __m256i agree = _mm256_cmpeq_epi64(unlinked, non_edge);
    const int lanes = _mm256_movemask_pd(_mm256_castsi256_pd(agree));
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(lanes)));
  }
  for (; v < n; ++v) {
    const bool linked = (a_masks[v] & qa) != 0 && (b_masks[v] & qb) != 0;
    count += static_cast<std::size_t>(linked == (adj_row[v] != 0));
  }
  return count;
}

}  // namespace coint::kernels::avx2
