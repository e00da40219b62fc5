#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Word-level popcount kernels. Everything above this layer (difference
// counts, autocorrelation, Gram checks) reduces to popcount(a & b) or
// popcount(a ^ b) over small word arrays, so these two loops carry nearly
// all of the arithmetic. A scalar reference implementation is always
// present; AVX2 (x86-64) and NEON (aarch64) variants are selected at
// runtime and must agree bit-for-bit with the scalar one.

namespace hadamard::kern {

using u64 = std::uint64_t;

enum class Variant { scalar, avx2, neon };

std::string variant_name(Variant v);

// Variants usable on this machine, scalar first.
std::vector<Variant> supported_variants();

// Currently dispatched variant.
Variant active_variant();

// Force a specific variant (used by the equivalence tests). Returns false
// and leaves the dispatch unchanged if the variant is not supported here.
bool set_variant(Variant v);

// sum_i popcount(a[i] & b[i])
int popcount_and(const u64* a, const u64* b, std::size_t nwords);

// sum_i popcount(a[i] ^ b[i])
int popcount_xor(const u64* a, const u64* b, std::size_t nwords);

// Scalar reference kernels, callable directly regardless of dispatch.
int popcount_and_scalar(const u64* a, const u64* b, std::size_t nwords);
int popcount_xor_scalar(const u64* a, const u64* b, std::size_t nwords);

#if defined(__x86_64__)
int popcount_and_avx2(const u64* a, const u64* b, std::size_t nwords);
int popcount_xor_avx2(const u64* a, const u64* b, std::size_t nwords);
#endif

#if defined(__aarch64__)
int popcount_and_neon(const u64* a, const u64* b, std::size_t nwords);
int popcount_xor_neon(const u64* a, const u64* b, std::size_t nwords);
#endif

}  // namespace hadamard::kern
