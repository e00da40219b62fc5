#include "hadamard/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hadamard {

FamilyParams::FamilyParams(Modulus v_, std::vector<int> k_, int lambda_)
    : v(v_), k(std::move(k_)), lambda(lambda_) {
    if (k.empty()) throw std::invalid_argument("family needs at least one block size");
    for (int ki : k) {
        if (ki < 0 || ki > v.value())
            throw std::invalid_argument("block size " + std::to_string(ki) +
                                        " out of range for v=" + std::to_string(v.value()));
    }
    if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
}

const char* tag_name(BlockTag t) {
    switch (t) {
        case BlockTag::none: return "none";
        case BlockTag::skew: return "skew";
        case BlockTag::symmetric: return "sym";
    }
    return "?";
}

DifferenceFamily::DifferenceFamily(FamilyParams params, std::vector<Block> blocks,
                                   std::vector<BlockTag> tags)
    : params_(std::move(params)), blocks_(std::move(blocks)), tags_(std::move(tags)) {
    if (tags_.empty()) tags_.assign(blocks_.size(), BlockTag::none);
    if (blocks_.size() != params_.k.size() || tags_.size() != blocks_.size())
        throw std::invalid_argument("family block/tag count does not match parameters");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].modulus() != params_.v)
            throw std::invalid_argument("block " + std::to_string(i) +
                                        " has mismatched modulus");
        if (blocks_[i].size() != params_.k[i])
            throw std::invalid_argument("block " + std::to_string(i) + " has size " +
                                        std::to_string(blocks_[i].size()) + ", expected k=" +
                                        std::to_string(params_.k[i]));
    }
}

DifferenceFamily DifferenceFamily::from_blocks(std::vector<Block> blocks, int lambda,
                                               std::vector<BlockTag> tags) {
    if (blocks.empty()) throw std::invalid_argument("family needs at least one block");
    std::vector<int> k;
    k.reserve(blocks.size());
    for (const Block& b : blocks) k.push_back(b.size());
    FamilyParams params(blocks.front().modulus(), std::move(k), lambda);
    return DifferenceFamily(std::move(params), std::move(blocks), std::move(tags));
}

bool check_params(const FamilyParams& p) {
    long long lhs = 0;
    for (int ki : p.k) lhs += static_cast<long long>(ki) * (ki - 1);
    return lhs == static_cast<long long>(p.lambda) * (p.v.value() - 1);
}

VerificationReport verify_family(const DifferenceFamily& f) {
    VerificationReport report;
    report.params_ok = check_params(f.params());

    const int v = f.v();
    std::vector<long long> sums(static_cast<std::size_t>(v), 0);
    for (const Block& b : f.blocks()) {
        const std::vector<int> spectrum = diff_spectrum(b);
        for (int s = 0; s < v; ++s)
            sums[static_cast<std::size_t>(s)] += spectrum[static_cast<std::size_t>(s)];
    }
    for (int s = 1; s < v; ++s) {
        if (sums[static_cast<std::size_t>(s)] != f.params().lambda)
            report.failures.push_back(
                {s, static_cast<int>(sums[static_cast<std::size_t>(s)]), f.params().lambda});
    }

    report.tags_ok = true;
    for (int i = 0; i < f.m(); ++i) {
        bool ok = true;
        switch (f.tag(i)) {
            case BlockTag::none: break;
            case BlockTag::skew: ok = is_skew(f.block(i)); break;
            case BlockTag::symmetric: ok = is_symmetric_block(f.block(i)); break;
        }
        if (!ok) {
            report.tags_ok = false;
            report.bad_tags.push_back(i);
        }
    }
    return report;
}

bool gs_feasible(const FamilyParams& p) {
    if (p.m() != 4)
        throw std::invalid_argument("gs_feasible needs exactly 4 block sizes, got " +
                                    std::to_string(p.m()));
    long long ksum = std::accumulate(p.k.begin(), p.k.end(), 0LL);
    return ksum - p.lambda == p.v.value();
}

bool split_check(const DifferenceFamily& f, const std::array<std::vector<int>, 2>& partition,
                 std::pair<int, int> lambdas) {
    std::vector<bool> seen(static_cast<std::size_t>(f.m()), false);
    for (const auto& part : partition) {
        for (int i : part) {
            if (i < 0 || i >= f.m())
                throw std::invalid_argument("partition index " + std::to_string(i) +
                                            " out of range");
            if (seen[static_cast<std::size_t>(i)])
                throw std::invalid_argument("partition repeats index " + std::to_string(i));
            seen[static_cast<std::size_t>(i)] = true;
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw std::invalid_argument("partition does not cover all blocks");

    const std::array<int, 2> lam{lambdas.first, lambdas.second};
    for (int piece = 0; piece < 2; ++piece) {
        std::vector<Block> blocks;
        std::vector<BlockTag> tags;
        for (int i : partition[static_cast<std::size_t>(piece)]) {
            blocks.push_back(f.block(i));
            tags.push_back(f.tag(i));
        }
        if (blocks.empty()) throw std::invalid_argument("partition piece is empty");
        DifferenceFamily sub =
            DifferenceFamily::from_blocks(std::move(blocks), lam[static_cast<std::size_t>(piece)],
                                          std::move(tags));
        if (!verify_family(sub).passed()) return false;
    }
    return true;
}

namespace {

// Least translate of a block; the winner always contains 0 (for nonempty,
// proper blocks), so only translates moving an element onto 0 compete.
Block min_translate(const Block& b) {
    if (b.size() == 0 || b.size() == b.v()) return b;
    const int v = b.v();
    Block best = b;
    bool first = true;
    std::vector<int> elems = b.elements();
    for (int x : elems) {
        Block cand = b.translated(v - x);
        if (first || cand < best) {
            best = std::move(cand);
            first = false;
        }
    }
    return best;
}

bool blocks_less(const std::vector<Block>& a, const std::vector<Block>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

}  // namespace

namespace {

DifferenceFamily minimize_over_units(const DifferenceFamily& f, const std::vector<int>& unit_set) {
    const int m = f.m();

    // Positions sharing a block size may be permuted; sorting each group of
    // minimized blocks realizes the least arrangement.
    std::map<int, std::vector<int>> by_size;
    for (int i = 0; i < m; ++i) by_size[f.params().k[static_cast<std::size_t>(i)]].push_back(i);

    std::vector<Block> best;
    bool have_best = false;
    for (int u : unit_set) {
        std::vector<Block> cand;
        cand.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) cand.push_back(min_translate(f.block(i).scaled(u)));
        for (const auto& [size, idxs] : by_size) {
            (void)size;
            std::vector<Block> group;
            group.reserve(idxs.size());
            for (int i : idxs) group.push_back(cand[static_cast<std::size_t>(i)]);
            std::sort(group.begin(), group.end());
            for (std::size_t j = 0; j < idxs.size(); ++j)
                cand[static_cast<std::size_t>(idxs[j])] = std::move(group[j]);
        }
        if (!have_best || blocks_less(cand, best)) {
            best = std::move(cand);
            have_best = true;
        }
    }
    return DifferenceFamily(f.params(), std::move(best), {});
}

}  // namespace

DifferenceFamily canonical_form(const DifferenceFamily& f) {
    return minimize_over_units(f, units(f.params().v));
}

DifferenceFamily translation_canonical_form(const DifferenceFamily& f) {
    return minimize_over_units(f, {1 % f.v()});
}

bool family_less(const DifferenceFamily& a, const DifferenceFamily& b) {
    if (a.v() != b.v()) return a.v() < b.v();
    if (a.params().k != b.params().k) return a.params().k < b.params().k;
    if (a.params().lambda != b.params().lambda) return a.params().lambda < b.params().lambda;
    return blocks_less(a.blocks(), b.blocks());
}

}  // namespace hadamard
