#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "hadamard/bits.hpp"
#include "hadamard/kernels.hpp"

using namespace hadamard;

namespace {

std::vector<kern::u64> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<kern::u64> out(n);
    for (auto& w : out) w = rng();
    return out;
}

}  // namespace

TEST_CASE("scalar kernels match a plain per-word popcount") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(trial % 17);
        auto a = random_words(rng, n);
        auto b = random_words(rng, n);
        int and_ref = 0, xor_ref = 0;
        for (std::size_t i = 0; i < n; ++i) {
            and_ref += std::popcount(a[i] & b[i]);
            xor_ref += std::popcount(a[i] ^ b[i]);
        }
        CHECK(kern::popcount_and_scalar(a.data(), b.data(), n) == and_ref);
        CHECK(kern::popcount_xor_scalar(a.data(), b.data(), n) == xor_ref);
    }
}

TEST_CASE("every supported variant agrees with the scalar reference") {
    std::mt19937_64 rng(11);
    const auto variants = kern::supported_variants();
    REQUIRE(!variants.empty());
    INFO("active variant: " << kern::variant_name(kern::active_variant()));

    for (int trial = 0; trial < 500; ++trial) {
        // lengths straddle the 4-word vector body and its scalar tail
        const std::size_t n = static_cast<std::size_t>(trial % 23);
        auto a = random_words(rng, n);
        auto b = random_words(rng, n);
        const int and_ref = kern::popcount_and_scalar(a.data(), b.data(), n);
        const int xor_ref = kern::popcount_xor_scalar(a.data(), b.data(), n);
        for (kern::Variant v : variants) {
            REQUIRE(kern::set_variant(v));
            CHECK(kern::popcount_and(a.data(), b.data(), n) == and_ref);
            CHECK(kern::popcount_xor(a.data(), b.data(), n) == xor_ref);
        }
    }
    // restore the default selection
    kern::set_variant(variants.back());
}

TEST_CASE("unsupported variants are rejected") {
#if !defined(__aarch64__)
    CHECK_FALSE(kern::set_variant(kern::Variant::neon));
#endif
#if !defined(__x86_64__)
    CHECK_FALSE(kern::set_variant(kern::Variant::avx2));
#endif
    CHECK(kern::set_variant(kern::Variant::scalar));
    CHECK(kern::active_variant() == kern::Variant::scalar);
    kern::set_variant(kern::supported_variants().back());
}

TEST_CASE("BitVec rotation matches the per-bit definition") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 200);
        BitVec bits(n);
        for (int i = 0; i < n; ++i) {
            if (rng() & 1) bits.set(i);
        }
        const int s = static_cast<int>(rng() % static_cast<kern::u64>(n));
        BitVec rotated = bits.rotl(s);
        for (int i = 0; i < n; ++i) CHECK(rotated.test((i + s) % n) == bits.test(i));
        CHECK(rotated.count() == bits.count());
    }
}

TEST_CASE("BitVec element iteration is sorted and complete") {
    BitVec bits(130);
    bits.set(0);
    bits.set(63);
    bits.set(64);
    bits.set(129);
    CHECK(bits.to_elements() == std::vector<int>{0, 63, 64, 129});
    CHECK(bits.next_set(0) == 0);
    CHECK(bits.next_set(1) == 63);
    CHECK(bits.next_set(65) == 129);
    CHECK(bits.next_set(130) == -1);
}

TEST_CASE("lex_set_less orders by element sequence") {
    auto make = [](std::initializer_list<int> elems) {
        BitVec b(10);
        for (int e : elems) b.set(e);
        return b;
    };
    CHECK(lex_set_less(make({0, 1, 3}), make({0, 2})));
    CHECK_FALSE(lex_set_less(make({0, 2}), make({0, 1, 3})));
    CHECK(lex_set_less(make({0, 1}), make({0, 1, 2})));  // proper prefix
    CHECK_FALSE(lex_set_less(make({0, 1}), make({0, 1})));
}
