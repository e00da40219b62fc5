#pragma once

#include <vector>

#include "hadamard/bits.hpp"

// Residue arithmetic mod v: blocks (subsets of Z_v), skew/symmetric block
// predicates, orbits of multiplicative subgroups, and exact difference
// counts. All values are immutable after construction and all operations
// are pure, so everything here is safe to share across threads.

namespace hadamard {

class Modulus {
public:
    explicit Modulus(int v);
    int value() const { return v_; }

    friend bool operator==(Modulus a, Modulus b) { return a.v_ == b.v_; }
    friend bool operator!=(Modulus a, Modulus b) { return a.v_ != b.v_; }

private:
    int v_;
};

// A subset of Z_v in canonical form: membership bitset, elements read out
// sorted ascending. Intersections and difference counts run on whole words.
class Block {
public:
    explicit Block(Modulus v) : v_(v), bits_(v.value()) {}
    Block(Modulus v, BitVec bits);

    // Strict constructor: elements must be distinct and in [0, v).
    static Block from_elements(Modulus v, const std::vector<int>& elements);

    Modulus modulus() const { return v_; }
    int v() const { return v_.value(); }
    int size() const { return bits_.count(); }
    bool contains(int x) const { return bits_.test(x); }
    const BitVec& bits() const { return bits_; }
    std::vector<int> elements() const { return bits_.to_elements(); }

    // { x + t mod v : x in X }
    Block translated(int t) const;
    // { u * x mod v : x in X }
    Block scaled(int u) const;

    friend bool operator==(const Block& a, const Block& b) {
        return a.v_ == b.v_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Block& a, const Block& b) { return !(a == b); }
    // Lexicographic order of the sorted element sequences.
    friend bool operator<(const Block& a, const Block& b) {
        return lex_set_less(a.bits_, b.bits_);
    }

private:
    Modulus v_;
    BitVec bits_;
};

struct OrbitSpec {
    Modulus v;
    std::vector<int> subgroup;         // elements of H <= Z_v^*
    std::vector<int> representatives;  // orbit representatives, reduced mod v
};

// Any integers accepted; reduced mod v, deduplicated, sorted.
Block normalize_block(const std::vector<long long>& raw, Modulus v);

// { (v - x) mod v : x in X }
Block negate_block(const Block& x);

// True iff 0 is not in X, X and -X are disjoint, and they cover Z_v \ {0}.
// Structurally impossible inputs (even v, wrong cardinality) return false.
bool is_skew(const Block& x);

// True iff -X = X.
bool is_symmetric_block(const Block& x);

// Throws std::invalid_argument unless H contains 1, consists of units, and
// is closed under multiplication mod v.
void validate_subgroup(Modulus v, const std::vector<int>& subgroup);

// Union of the H-orbits of the representatives.
Block expand_orbits(const OrbitSpec& spec);

// d_X(s) = |{ (x,y) in X x X : x - y = s mod v }| = |X ∩ (X + s)|.
int diff_count(const Block& x, int s);

// All of d_X(0), ..., d_X(v-1) in one pass.
std::vector<int> diff_spectrum(const Block& x);

// Units of Z_v in increasing order.
std::vector<int> units(Modulus v);

}  // namespace hadamard
