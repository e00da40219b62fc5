#include "hadamard/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

#include <bit>

// AVX2 popcount via the nibble-LUT shuffle (Mula). Word arrays here are
// short (a ±1 row of length v packs into ceil(v/64) words), so the vector
// body handles 4-word chunks and the tail falls back to scalar popcount.

namespace hadamard::kern {

namespace {

__attribute__((target("avx2"))) inline __m256i popcnt_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline int hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<int>(_mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1));
}

}  // namespace

__attribute__((target("avx2"))) int popcount_and_avx2(const u64* a, const u64* b,
                                                      std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcnt_bytes(_mm256_and_si256(va, vb)));
    }
    int total = hsum_epi64(acc);
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

__attribute__((target("avx2"))) int popcount_xor_avx2(const u64* a, const u64* b,
                                                      std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcnt_bytes(_mm256_xor_si256(va, vb)));
    }
    int total = hsum_epi64(acc);
    for (; i < n; ++i) total += std::popcount(a[i] ^ b[i]);
    return total;
}

}  // namespace hadamard::kern

#endif  // __x86_64__
