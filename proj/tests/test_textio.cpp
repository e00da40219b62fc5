#include <doctest.h>

#include <random>
#include <sstream>

#include "hadamard/catalog.hpp"
#include "hadamard/textio.hpp"

using namespace hadamard;

TEST_CASE("family files parse with comments, tags and blank lines") {
    const std::string text =
        "# a comment\n"
        "\n"
        "v=5 lambda=1\n"
        "X0[skew]: 1 2\n"
        "  # indented comment\n"
        "X1[sym]: 1 4\n"
        "X2:\n";
    const DifferenceFamily f = parse_family_string(text);
    CHECK(f.v() == 5);
    CHECK(f.params().lambda == 1);
    CHECK(f.m() == 3);
    CHECK(f.block(0).elements() == std::vector<int>{1, 2});
    CHECK(f.tag(0) == BlockTag::skew);
    CHECK(f.tag(1) == BlockTag::symmetric);
    CHECK(f.block(2).elements().empty());
}

TEST_CASE("orbit block lines expand at parse time") {
    const std::string text =
        "v=73 lambda=63\n"
        "X0[skew]: orbit H=1,2,4,8,16,32,37,55,64 reps=5,9,11,25\n"
        "X1: orbit H=1,2,4,8,16,32,37,55,64 reps=11,13,17,25\n"
        "X2: orbit H=1,2,4,8,16,32,37,55,64 reps=5,9,13,17\n"
        "X3: orbit H=1,2,4,8,16,32,37,55,64 reps=0,1,3,13\n";
    const DifferenceFamily f = parse_family_string(text);
    CHECK(f == get_family("skew-292-1"));
}

TEST_CASE("family parse/serialize round-trips") {
    for (const CatalogEntry& e : list_entries()) {
        const DifferenceFamily f = get_family(e.id);
        const std::string text = serialize_family(f);
        const DifferenceFamily again = parse_family_string(text);
        CHECK(again == f);
        CHECK(serialize_family(again) == text);
    }
}

TEST_CASE("malformed family files are rejected") {
    CHECK_THROWS_AS(parse_family_string(""), ParseError);
    CHECK_THROWS_AS(parse_family_string("v=5\nX0: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_family_string("v=5 lambda=1\nX1: 1\n"), ParseError);  // starts at X1
    CHECK_THROWS_AS(parse_family_string("v=5 lambda=1\nX0: 7\n"), ParseError);  // out of range
    CHECK_THROWS_AS(parse_family_string("v=5 lambda=1\nX0: 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_family_string("v=5 lambda=1\nX0[weird]: 1\n"), ParseError);
    CHECK_THROWS_AS(parse_family_string("v=5 lambda=1\nX0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_family_string("v=0 lambda=1\nX0: 0\n"), ParseError);
    CHECK_THROWS_AS(parse_family_string("v=5 lambda=1\n"), ParseError);
    CHECK_THROWS_AS(parse_family_string("v=5 lambda=1\nX0: orbit H=1,2 reps=1\n"), ParseError);
}

TEST_CASE("matrix files round-trip") {
    SquareSignMatrix m(4);
    std::mt19937 rng(101);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.set(r, c, (rng() & 1) ? 1 : -1);
    const std::string text = serialize_matrix(m);
    std::istringstream in(text);
    CHECK(parse_matrix(in) == m);
}

TEST_CASE("malformed matrix files are rejected") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_matrix(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("order=2\n++\n"), ParseError);        // missing row
    CHECK_THROWS_AS(parse("order=2\n++\n+\n"), ParseError);     // ragged
    CHECK_THROWS_AS(parse("order=2\n++\n+0\n"), ParseError);    // bad character
    CHECK_THROWS_AS(parse("order=2\n++\n++\n--\n"), ParseError);  // extra row
    CHECK_THROWS_AS(parse("n=2\n++\n++\n"), ParseError);
}
