#include "hadamard/zmod.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hadamard {

Modulus::Modulus(int v) : v_(v) {
    if (v < 1) throw std::invalid_argument("modulus must be >= 1, got " + std::to_string(v));
}

Block::Block(Modulus v, BitVec bits) : v_(v), bits_(std::move(bits)) {
    if (bits_.size() != v_.value())
        throw std::invalid_argument("bitset width does not match modulus");
}

Block Block::from_elements(Modulus v, const std::vector<int>& elements) {
    BitVec bits(v.value());
    for (int x : elements) {
        if (x < 0 || x >= v.value())
            throw std::invalid_argument("element " + std::to_string(x) + " out of range mod " +
                                        std::to_string(v.value()));
        if (bits.test(x))
            throw std::invalid_argument("duplicate element " + std::to_string(x));
        bits.set(x);
    }
    return Block(v, std::move(bits));
}

Block Block::translated(int t) const {
    t %= v();
    if (t < 0) t += v();
    return Block(v_, bits_.rotl(t));
}

Block Block::scaled(int u) const {
    long long m = u % v();
    if (m < 0) m += v();
    BitVec out(v());
    bits_.for_each_set([&](int x) { out.set(static_cast<int>(m * x % v())); });
    return Block(v_, std::move(out));
}

Block normalize_block(const std::vector<long long>& raw, Modulus v) {
    BitVec bits(v.value());
    for (long long x : raw) {
        long long r = x % v.value();
        if (r < 0) r += v.value();
        bits.set(static_cast<int>(r));
    }
    return Block(v, std::move(bits));
}

Block negate_block(const Block& x) {
    BitVec out(x.v());
    x.bits().for_each_set([&](int e) { out.set(e == 0 ? 0 : x.v() - e); });
    return Block(x.modulus(), std::move(out));
}

bool is_skew(const Block& x) {
    const int v = x.v();
    if (v > 1 && x.contains(0)) return false;
    if (2 * x.size() != v - 1) return false;
    Block neg = negate_block(x);
    return and_count(x.bits(), neg.bits()) == 0;
}

bool is_symmetric_block(const Block& x) { return negate_block(x) == x; }

void validate_subgroup(Modulus v, const std::vector<int>& subgroup) {
    const int m = v.value();
    BitVec members(m);
    for (int h : subgroup) {
        if (h < 0 || h >= m)
            throw std::invalid_argument("subgroup element " + std::to_string(h) +
                                        " out of range mod " + std::to_string(m));
        if (std::gcd(h, m) != 1)
            throw std::invalid_argument("subgroup element " + std::to_string(h) +
                                        " is not a unit mod " + std::to_string(m));
        members.set(h);
    }
    if (!members.test(1 % m)) throw std::invalid_argument("subgroup does not contain 1");
    for (int a : subgroup) {
        for (int b : subgroup) {
            int p = static_cast<int>(static_cast<long long>(a) * b % m);
            if (!members.test(p))
                throw std::invalid_argument("subgroup not closed: " + std::to_string(a) + "*" +
                                            std::to_string(b) + " = " + std::to_string(p) +
                                            " missing");
        }
    }
}

Block expand_orbits(const OrbitSpec& spec) {
    validate_subgroup(spec.v, spec.subgroup);
    const int m = spec.v.value();
    BitVec out(m);
    for (int r : spec.representatives) {
        int rr = r % m;
        if (rr < 0) rr += m;
        for (int h : spec.subgroup) out.set(static_cast<int>(static_cast<long long>(h) * rr % m));
    }
    return Block(spec.v, std::move(out));
}

int diff_count(const Block& x, int s) {
    if (s < 0 || s >= x.v())
        throw std::out_of_range("shift " + std::to_string(s) + " out of range mod " +
                                std::to_string(x.v()));
    return and_count(x.bits(), x.bits().rotl(s));
}

std::vector<int> diff_spectrum(const Block& x) {
    const int v = x.v();
    std::vector<int> out(static_cast<std::size_t>(v));
    BitVec scratch(v);
    for (int s = 0; s < v; ++s) {
        x.bits().rotl_into(s, scratch);
        out[static_cast<std::size_t>(s)] = and_count(x.bits(), scratch);
    }
    return out;
}

std::vector<int> units(Modulus v) {
    const int m = v.value();
    if (m == 1) return {0};
    std::vector<int> out;
    for (int u = 1; u < m; ++u) {
        if (std::gcd(u, m) == 1) out.push_back(u);
    }
    return out;
}

}  // namespace hadamard
