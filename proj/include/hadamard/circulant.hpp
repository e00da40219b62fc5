#pragma once

#include <string>
#include <vector>

#include "hadamard/zmod.hpp"

// First rows of circulant ±1 matrices and their periodic autocorrelation.
// The sign convention is fixed: -1 exactly on the elements of the defining
// block. Everything is exact integer arithmetic.

namespace hadamard {

class SignRow {
public:
    // minus_mask bit i set means entry i is -1.
    SignRow(Modulus v, BitVec minus_mask);

    static SignRow from_signs(Modulus v, const std::vector<int>& signs);

    Modulus modulus() const { return v_; }
    int v() const { return v_.value(); }
    int sign(int i) const { return minus_.test(i) ? -1 : +1; }
    const BitVec& minus_mask() const { return minus_; }

    // '+' / '-' characters, one per entry.
    std::string to_string() const;

    friend bool operator==(const SignRow& a, const SignRow& b) {
        return a.v_ == b.v_ && a.minus_ == b.minus_;
    }
    friend bool operator!=(const SignRow& a, const SignRow& b) { return !(a == b); }

private:
    Modulus v_;
    BitVec minus_;
};

// signs_i = -1 iff i in X.
SignRow row_from_block(const Block& x);

// Inverse of row_from_block.
Block block_from_row(const SignRow& r);

// PAF(s) = sum_i a_i * a_{(i+s) mod v}.
int paf(const SignRow& r, int s);

// Entry s is paf(r, s); entry 0 is v.
std::vector<int> paf_spectrum(const SignRow& r);

}  // namespace hadamard
