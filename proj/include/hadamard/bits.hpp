#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "hadamard/kernels.hpp"

namespace hadamard {

// Fixed-width bit string of n bits backed by 64-bit words. Bit i of a
// BitVec over Z_v records membership of residue i, so cyclic rotation is
// the same thing as translation and the popcount kernels do the counting.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(int nbits)
        : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {
        assert(nbits >= 0);
    }

    int size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const kern::u64* data() const { return words_.data(); }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) >> 6] |= kern::u64{1} << (i & 63);
    }

    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) >> 6] &= ~(kern::u64{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    void or_with(const BitVec& other) {
        assert(other.nbits_ == nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    }

    int count() const {
        int total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }

    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }

    // Smallest set bit index >= from, or -1.
    int next_set(int from) const {
        if (from >= nbits_) return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        kern::u64 w = words_[wi] & (~kern::u64{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            kern::u64 w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each_set([&](int i) { out.push_back(i); });
        return out;
    }

    // Cyclic left rotation within the n-bit window: bit i -> bit (i+s) mod n.
    void rotl_into(int s, BitVec& out) const;

    BitVec rotl(int s) const {
        BitVec out(nbits_);
        rotl_into(s, out);
        return out;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    friend int and_count(const BitVec& a, const BitVec& b) {
        assert(a.nbits_ == b.nbits_);
        return kern::popcount_and(a.words_.data(), b.words_.data(), a.words_.size());
    }

    friend int xor_count(const BitVec& a, const BitVec& b) {
        assert(a.nbits_ == b.nbits_);
        return kern::popcount_xor(a.words_.data(), b.words_.data(), a.words_.size());
    }

    // Order of the corresponding strictly increasing element sequences.
    friend bool lex_set_less(const BitVec& a, const BitVec& b) {
        int ia = a.next_set(0);
        int ib = b.next_set(0);
        while (ia >= 0 && ib >= 0) {
            if (ia != ib) return ia < ib;
            ia = a.next_set(ia + 1);
            ib = b.next_set(ib + 1);
        }
        return ia < 0 && ib >= 0;
    }

private:
    int nbits_ = 0;
    std::vector<kern::u64> words_;
};

}  // namespace hadamard
