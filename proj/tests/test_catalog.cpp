#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hadamard/catalog.hpp"
#include "hadamard/plug.hpp"

using namespace hadamard;

namespace {

// The explicit element listing of the first order-372 family, used to pin
// the orbit expansion of its representatives.
const std::vector<int> kSym372FirstX0{
    0,  1,  3,  4,  7,  9,  11, 15, 16, 17, 18, 20, 23, 25, 26, 28, 31, 35, 38, 39, 40, 44, 45,
    48, 49, 53, 54, 55, 58, 62, 65, 67, 68, 70, 73, 75, 76, 77, 78, 82, 84, 86, 89, 90, 92};
const std::vector<int> kSym372FirstX1{
    2,  3,  9,  13, 15, 16, 20, 22, 28, 29, 31, 34, 35, 36, 38, 39, 41, 43, 44, 45, 46,
    48, 49, 50, 51, 52, 54, 62, 63, 65, 66, 69, 74, 75, 77, 79, 83, 84, 85, 87, 91};
const std::vector<int> kSym372FirstX3{
    1,  2,  3,  8,  10, 13, 14, 15, 17, 19, 23, 25, 26, 31, 34, 36, 37, 40, 41, 43, 46,
    50, 51, 52, 53, 61, 62, 63, 64, 66, 67, 68, 69, 70, 71, 75, 76, 87, 88, 91, 92};

}  // namespace

TEST_CASE("the catalog lists every embedded entry") {
    const std::vector<CatalogEntry> entries = list_entries();
    REQUIRE(entries.size() == 10);

    std::set<std::string> ids;
    for (const CatalogEntry& e : entries) ids.insert(e.id);
    for (const char* id : {"szekeres-69", "doptimal-69-1", "skew-276-1", "skew-292-1",
                           "sym-372-1", "sym-372-2", "sym-372-3", "sym-372-4", "gs-12",
                           "propus-12"})
        CHECK(ids.count(id) == 1);

    CHECK(get_entry("skew-276-1").expected_order == 276);
    CHECK(get_entry("skew-276-1").expected_class == MatrixClass::skew);
    CHECK(get_entry("skew-292-1").expected_order == 292);
    CHECK(get_entry("sym-372-1").expected_order == 372);
    CHECK(get_entry("sym-372-1").expected_class == MatrixClass::symmetric);
    CHECK(get_entry("szekeres-69").expected_order == 0);
    CHECK(get_entry("szekeres-69").kind == EntryKind::two_block_piece);
}

TEST_CASE("unknown ids are rejected") {
    CHECK_THROWS_AS(get_family("nope"), std::out_of_range);
    CHECK_FALSE(has_entry("nope"));
}

TEST_CASE("every catalog entry verifies, tags included") {
    for (const CatalogEntry& e : list_entries()) {
        const DifferenceFamily f = get_family(e.id);
        INFO("entry " << e.id);
        CHECK(verify_family(f).passed());
        if (e.kind == EntryKind::gs_family || e.kind == EntryKind::propus_family) {
            CHECK(f.m() == 4);
            CHECK(gs_feasible(f.params()));
            CHECK(e.expected_order == 4 * f.v());
        }
        if (e.kind == EntryKind::propus_family) {
            CHECK(f.block(1) == f.block(2));
            CHECK(is_symmetric_block(f.block(0)));
        }
    }
}

TEST_CASE("szekeres-69 has a skew and a symmetric block") {
    const DifferenceFamily f = get_family("szekeres-69");
    CHECK(f.params() == FamilyParams(Modulus(69), {34, 34}, 33));
    CHECK(is_skew(f.block(0)));
    CHECK(is_symmetric_block(f.block(1)));
    CHECK(f.tag(0) == BlockTag::skew);
    CHECK(f.tag(1) == BlockTag::symmetric);
}

TEST_CASE("skew-276-1 is the concatenation of its two pieces") {
    const DifferenceFamily whole = get_family("skew-276-1");
    const DifferenceFamily a = get_family("szekeres-69");
    const DifferenceFamily b = get_family("doptimal-69-1");
    CHECK(whole.params() == FamilyParams(Modulus(69), {34, 34, 31, 27}, 57));
    CHECK(whole.block(0) == a.block(0));
    CHECK(whole.block(1) == a.block(1));
    CHECK(whole.block(2) == b.block(0));
    CHECK(whole.block(3) == b.block(1));

    CHECK(split_check(whole, {{{0, 1}, {2, 3}}}, {33, 24}));
    CHECK_FALSE(split_check(whole, {{{0, 2}, {1, 3}}}, {33, 24}));
}

TEST_CASE("skew-292-1 expands to the right parameters with a skew first block") {
    const DifferenceFamily f = get_family("skew-292-1");
    CHECK(f.params() == FamilyParams(Modulus(73), {36, 36, 36, 28}, 63));
    CHECK(is_skew(f.block(0)));
    CHECK(f.block(3).contains(0));
}

TEST_CASE("the first order-372 family matches its explicit listing") {
    const DifferenceFamily f = get_family("sym-372-1");
    CHECK(f.block(0).elements() == kSym372FirstX0);
    CHECK(f.block(1).elements() == kSym372FirstX1);
    CHECK(f.block(2).elements() == kSym372FirstX1);
    CHECK(f.block(3).elements() == kSym372FirstX3);
}

TEST_CASE("the four order-372 families are pairwise distinct by canonical form") {
    std::vector<DifferenceFamily> canons;
    for (const char* id : {"sym-372-1", "sym-372-2", "sym-372-3", "sym-372-4"})
        canons.push_back(canonical_form(get_family(id)));
    for (std::size_t i = 0; i < canons.size(); ++i)
        for (std::size_t j = i + 1; j < canons.size(); ++j)
            CHECK_FALSE(canons[i] == canons[j]);
}

TEST_CASE("the four order-276 rows have vanishing PAF sums at every nonzero shift") {
    const DifferenceFamily f = get_family("skew-276-1");
    std::vector<std::vector<int>> spectra;
    for (int i = 0; i < 4; ++i) spectra.push_back(paf_spectrum(row_from_block(f.block(i))));
    for (int s = 1; s < 69; ++s) {
        int sum = 0;
        for (const auto& sp : spectra) sum += sp[static_cast<std::size_t>(s)];
        CHECK(sum == 0);
    }
}

TEST_CASE("the demo entries build the matrices their class advertises") {
    {
        const DifferenceFamily f = get_family("gs-12");
        const SquareSignMatrix h = build_gs({row_from_block(f.block(0)), row_from_block(f.block(1)),
                                             row_from_block(f.block(2)),
                                             row_from_block(f.block(3))});
        CHECK(h.order() == 12);
        CHECK(is_skew_hadamard(h));
    }
    {
        const DifferenceFamily f = get_family("propus-12");
        const SquareSignMatrix h =
            build_propus({row_from_block(f.block(0)), row_from_block(f.block(1)),
                          row_from_block(f.block(2)), row_from_block(f.block(3))});
        CHECK(h.order() == 12);
        CHECK(is_hadamard(h));
        CHECK(is_symmetric_matrix(h));
    }
}
