#include "hadamard/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

namespace hadamard::kern {

namespace {

inline uint64x2_t popcnt_u64x2(uint8x16_t bytes) {
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(bytes))));
}

}  // namespace

int popcount_and_neon(const u64* a, const u64* b, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        acc = vaddq_u64(acc, popcnt_u64x2(vreinterpretq_u8_u64(vandq_u64(va, vb))));
    }
    int total = static_cast<int>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

int popcount_xor_neon(const u64* a, const u64* b, std::size_t n) {
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        acc = vaddq_u64(acc, popcnt_u64x2(vreinterpretq_u8_u64(veorq_u64(va, vb))));
    }
    int total = static_cast<int>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
    for (; i < n; ++i) total += std::popcount(a[i] ^ b[i]);
    return total;
}

}  // namespace hadamard::kern

#endif  // __aarch64__
