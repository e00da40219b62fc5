#include "hadamard/bits.hpp"

namespace hadamard {

void BitVec::rotl_into(int s, BitVec& out) const {
    assert(out.nbits_ == nbits_);
    if (nbits_ == 0) return;
    s %= nbits_;
    if (s < 0) s += nbits_;

    const std::size_t nw = words_.size();

    // out = ((x << s) | (x >> (n - s))) restricted to the n-bit window
    const std::size_t q = static_cast<std::size_t>(s) >> 6;
    const int r = s & 63;
    for (std::size_t i = nw; i-- > 0;) {
        kern::u64 w = 0;
        if (i >= q) {
            w = words_[i - q] << r;
            if (r && i > q) w |= words_[i - q - 1] >> (64 - r);
        }
        out.words_[i] = w;
    }

    if (s != 0) {
        const int t = nbits_ - s;
        const std::size_t q2 = static_cast<std::size_t>(t) >> 6;
        const int r2 = t & 63;
        for (std::size_t i = 0; i + q2 < nw; ++i) {
            kern::u64 w = words_[i + q2] >> r2;
            if (r2 && i + q2 + 1 < nw) w |= words_[i + q2 + 1] << (64 - r2);
            out.words_[i] |= w;
        }
    }

    const int top = nbits_ & 63;
    if (top) out.words_.back() &= (kern::u64{1} << top) - 1;
}

}  // namespace hadamard
