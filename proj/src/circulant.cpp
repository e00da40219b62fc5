#include "hadamard/circulant.hpp"

#include <stdexcept>

namespace hadamard {

SignRow::SignRow(Modulus v, BitVec minus_mask) : v_(v), minus_(std::move(minus_mask)) {
    if (minus_.size() != v_.value())
        throw std::invalid_argument("sign row mask width does not match modulus");
}

SignRow SignRow::from_signs(Modulus v, const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != v.value())
        throw std::invalid_argument("sign row length does not match modulus");
    BitVec mask(v.value());
    for (int i = 0; i < v.value(); ++i) {
        if (signs[static_cast<std::size_t>(i)] == -1)
            mask.set(i);
        else if (signs[static_cast<std::size_t>(i)] != 1)
            throw std::invalid_argument("sign entries must be +1 or -1");
    }
    return SignRow(v, std::move(mask));
}

std::string SignRow::to_string() const {
    std::string out(static_cast<std::size_t>(v()), '+');
    minus_.for_each_set([&](int i) { out[static_cast<std::size_t>(i)] = '-'; });
    return out;
}

SignRow row_from_block(const Block& x) { return SignRow(x.modulus(), x.bits()); }

Block block_from_row(const SignRow& r) { return Block(r.modulus(), r.minus_mask()); }

int paf(const SignRow& r, int s) {
    if (s < 0 || s >= r.v())
        throw std::out_of_range("shift " + std::to_string(s) + " out of range mod " +
                                std::to_string(r.v()));
    // a_i a_{i+s} = -1 exactly where the mask and its rotation disagree.
    return r.v() - 2 * xor_count(r.minus_mask(), r.minus_mask().rotl(s));
}

std::vector<int> paf_spectrum(const SignRow& r) {
    const int v = r.v();
    std::vector<int> out(static_cast<std::size_t>(v));
    BitVec scratch(v);
    for (int s = 0; s < v; ++s) {
        r.minus_mask().rotl_into(s, scratch);
        out[static_cast<std::size_t>(s)] = v - 2 * xor_count(r.minus_mask(), scratch);
    }
    return out;
}

}  // namespace hadamard
