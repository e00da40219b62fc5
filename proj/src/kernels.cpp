#include "hadamard/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace hadamard::kern {

int popcount_and_scalar(const u64* a, const u64* b, std::size_t n) {
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

int popcount_xor_scalar(const u64* a, const u64* b, std::size_t n) {
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] ^ b[i]);
    return total;
}

namespace {

using KernelFn = int (*)(const u64*, const u64*, std::size_t);

struct Dispatch {
    Variant variant;
    KernelFn and_fn;
    KernelFn xor_fn;
};

bool variant_supported(Variant v) {
    switch (v) {
        case Variant::scalar:
            return true;
        case Variant::avx2:
#if defined(__x86_64__)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Variant::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Dispatch make_dispatch(Variant v) {
    switch (v) {
#if defined(__x86_64__)
        case Variant::avx2:
            return {Variant::avx2, &popcount_and_avx2, &popcount_xor_avx2};
#endif
#if defined(__aarch64__)
        case Variant::neon:
            return {Variant::neon, &popcount_and_neon, &popcount_xor_neon};
#endif
        default:
            return {Variant::scalar, &popcount_and_scalar, &popcount_xor_scalar};
    }
}

Variant best_variant() {
    if (variant_supported(Variant::avx2)) return Variant::avx2;
    if (variant_supported(Variant::neon)) return Variant::neon;
    return Variant::scalar;
}

// Selected once at startup; set_variant is test-only and single-threaded.
Dispatch g_dispatch = make_dispatch(best_variant());

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::scalar: return "scalar";
        case Variant::avx2: return "avx2";
        case Variant::neon: return "neon";
    }
    throw std::logic_error("unknown kernel variant");
}

std::vector<Variant> supported_variants() {
    std::vector<Variant> out{Variant::scalar};
    if (variant_supported(Variant::avx2)) out.push_back(Variant::avx2);
    if (variant_supported(Variant::neon)) out.push_back(Variant::neon);
    return out;
}

Variant active_variant() { return g_dispatch.variant; }

bool set_variant(Variant v) {
    if (!variant_supported(v)) return false;
    g_dispatch = make_dispatch(v);
    return true;
}

int popcount_and(const u64* a, const u64* b, std::size_t n) {
    return g_dispatch.and_fn(a, b, n);
}

int popcount_xor(const u64* a, const u64* b, std::size_t n) {
    return g_dispatch.xor_fn(a, b, n);
}

}  // namespace hadamard::kern
