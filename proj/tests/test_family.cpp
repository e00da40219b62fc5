#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hadamard/family.hpp"
#include "oracle.hpp"

using namespace hadamard;

namespace {

Block blk(int v, const std::vector<int>& elems) { return Block::from_elements(Modulus(v), elems); }

DifferenceFamily fam(int v, const std::vector<std::vector<int>>& blocks, int lambda,
                     std::vector<BlockTag> tags = {}) {
    std::vector<Block> bs;
    for (const auto& b : blocks) bs.push_back(blk(v, b));
    return DifferenceFamily::from_blocks(std::move(bs), lambda, std::move(tags));
}

}  // namespace

TEST_CASE("check_params on the published parameter sets") {
    CHECK(check_params(FamilyParams(Modulus(69), {34, 34, 31, 27}, 57)));
    CHECK(check_params(FamilyParams(Modulus(73), {36, 36, 36, 28}, 63)));
    CHECK(check_params(FamilyParams(Modulus(93), {45, 41, 41, 41}, 75)));
    CHECK(check_params(FamilyParams(Modulus(69), {34, 34}, 33)));
    CHECK(check_params(FamilyParams(Modulus(69), {31, 27}, 24)));
    CHECK_FALSE(check_params(FamilyParams(Modulus(5), {2, 2}, 2)));
}

TEST_CASE("FamilyParams validates its fields") {
    CHECK_THROWS_AS(FamilyParams(Modulus(5), {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(Modulus(5), {6}, 1), std::invalid_argument);
    CHECK_THROWS_AS(FamilyParams(Modulus(5), {2}, -1), std::invalid_argument);
}

TEST_CASE("DifferenceFamily enforces structural invariants") {
    CHECK_THROWS_AS(DifferenceFamily(FamilyParams(Modulus(5), {2}, 1), {blk(7, {1, 2})}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(DifferenceFamily(FamilyParams(Modulus(5), {3}, 1), {blk(5, {1, 2})}, {}),
                    std::invalid_argument);
    // tags are data: a wrong tag constructs fine and fails verification
    DifferenceFamily f = fam(5, {{1, 4}}, 1, {BlockTag::skew});
    VerificationReport report = verify_family(f);
    CHECK_FALSE(report.tags_ok);
    CHECK(report.bad_tags == std::vector<int>{0});
}

TEST_CASE("verify_family accepts a verifying pair and reports failures otherwise") {
    CHECK(verify_family(fam(5, {{1, 2}, {1, 4}}, 1)).passed());

    VerificationReport bad = verify_family(fam(5, {{1, 2}, {1, 2}}, 1));
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.failures.size() == 4);  // every nonzero shift is off
    CHECK(bad.failures[0].shift == 1);
    CHECK(bad.failures[0].observed == 2);
    CHECK(bad.failures[1].shift == 2);
    CHECK(bad.failures[1].observed == 0);
}

TEST_CASE("verify_family is invariant under translations and a global unit") {
    const DifferenceFamily base = fam(5, {{1, 2}, {1, 4}}, 1);
    std::mt19937 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        const int u = std::vector<int>{1, 2, 3, 4}[rng() % 4];
        std::vector<Block> blocks;
        for (const Block& b : base.blocks())
            blocks.push_back(b.scaled(u).translated(static_cast<int>(rng() % 5)));
        CHECK(verify_family(DifferenceFamily::from_blocks(blocks, 1)).passed());
    }
}

TEST_CASE("verified families satisfy the counting identity") {
    std::mt19937 rng(61);
    int verified_seen = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 8);
        std::vector<Block> blocks;
        long long lambda_sum = 0;
        for (int i = 0; i < 2; ++i) {
            BitVec bits(v);
            for (int x = 0; x < v; ++x) {
                if (rng() & 1) bits.set(x);
            }
            blocks.emplace_back(Modulus(v), bits);
        }
        for (const Block& b : blocks) lambda_sum += static_cast<long long>(b.size()) * (b.size() - 1);
        if (lambda_sum % (v - 1) != 0) continue;
        DifferenceFamily f =
            DifferenceFamily::from_blocks(blocks, static_cast<int>(lambda_sum / (v - 1)));
        if (verify_family(f).passed()) {
            ++verified_seen;
            CHECK(check_params(f.params()));
        }
    }
    CHECK(verified_seen > 0);
}

TEST_CASE("gs_feasible") {
    CHECK(gs_feasible(FamilyParams(Modulus(69), {34, 34, 31, 27}, 57)));
    CHECK(gs_feasible(FamilyParams(Modulus(73), {36, 36, 36, 28}, 63)));
    CHECK_FALSE(gs_feasible(FamilyParams(Modulus(3), {1, 1, 1, 1}, 0)));
    CHECK_THROWS_AS(gs_feasible(FamilyParams(Modulus(5), {2, 2}, 1)), std::invalid_argument);
}

TEST_CASE("split_check") {
    const DifferenceFamily f = fam(5, {{1, 2}, {1, 4}, {0}, {0}}, 1);
    CHECK(split_check(f, {{{0, 1}, {2, 3}}}, {1, 0}));
    CHECK_FALSE(split_check(f, {{{0, 2}, {1, 3}}}, {1, 0}));
    CHECK_THROWS_AS(split_check(f, {{{0, 1}, {1, 3}}}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(split_check(f, {{{0, 1}, {2}}}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(split_check(f, {{{0, 1, 4}, {2, 3}}}, {1, 0}), std::invalid_argument);
}

TEST_CASE("canonical_form maps equivalent families together") {
    const DifferenceFamily a = fam(5, {{1, 2}}, 0);
    const DifferenceFamily b = fam(5, {{1, 3}}, 0);
    CHECK(canonical_form(a) == canonical_form(b));

    // any 2-subset of Z_5 lands on the same canonical block
    oracle::for_each_subset(5, 2, [&](const std::vector<int>& elems) {
        CHECK(canonical_form(fam(5, {elems}, 0)) == canonical_form(a));
    });
}

TEST_CASE("canonical_form is idempotent and constant on group orbits") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const int v = 3 + static_cast<int>(rng() % 11);
        std::vector<Block> blocks;
        for (int i = 0; i < 2; ++i) {
            BitVec bits(v);
            for (int x = 0; x < v; ++x) {
                if (rng() & 1) bits.set(x);
            }
            blocks.emplace_back(Modulus(v), bits);
        }
        const DifferenceFamily f = DifferenceFamily::from_blocks(blocks, 0);
        const DifferenceFamily canon = canonical_form(f);
        CHECK(canonical_form(canon) == canon);

        const std::vector<int> us = units(Modulus(v));
        const int u = us[rng() % us.size()];
        std::vector<Block> moved;
        for (const Block& b : f.blocks())
            moved.push_back(b.scaled(u).translated(static_cast<int>(rng() % v)));
        // permute the two blocks when their sizes agree
        if (moved[0].size() == moved[1].size() && (rng() & 1)) std::swap(moved[0], moved[1]);
        CHECK(canonical_form(DifferenceFamily::from_blocks(moved, 0)) == canon);
    }
}

TEST_CASE("canonical_form is translation-invariant on each block") {
    const DifferenceFamily f = fam(7, {{0, 1, 3}, {1, 2, 4}}, 2);
    std::vector<Block> shifted;
    for (const Block& b : f.blocks()) shifted.push_back(b.translated(7 % 7 + 3));
    CHECK(canonical_form(DifferenceFamily::from_blocks(shifted, 2)) == canonical_form(f));
}

TEST_CASE("translation_canonical_form refines canonical_form") {
    const DifferenceFamily f = fam(7, {{1, 2, 4}}, 1);
    const DifferenceFamily t = translation_canonical_form(f);
    CHECK(translation_canonical_form(t) == t);
    // unit action may change the translation-canonical form but never the
    // full canonical form
    const DifferenceFamily scaled =
        DifferenceFamily::from_blocks({f.block(0).scaled(3)}, 1);
    CHECK(canonical_form(scaled) == canonical_form(f));
}
