#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hadamard/zmod.hpp"

// Difference-family records, exact verification against the defining
// lambda condition, the Goethals-Seidel feasibility test, and a canonical
// form used as the deduplication key in searches.

namespace hadamard {

struct FamilyParams {
    Modulus v;
    std::vector<int> k;  // block sizes, length m >= 1
    int lambda = 0;

    FamilyParams(Modulus v_, std::vector<int> k_, int lambda_);

    int m() const { return static_cast<int>(k.size()); }

    friend bool operator==(const FamilyParams& a, const FamilyParams& b) {
        return a.v == b.v && a.k == b.k && a.lambda == b.lambda;
    }
};

enum class BlockTag { none, skew, symmetric };

const char* tag_name(BlockTag t);

// Tags are data supplied with the blocks, not inferred from them, so a
// verification run can distinguish "constraint violated" from "constraint
// absent".
class DifferenceFamily {
public:
    DifferenceFamily(FamilyParams params, std::vector<Block> blocks, std::vector<BlockTag> tags);

    // Derives the size sequence from the blocks; tags default to none.
    static DifferenceFamily from_blocks(std::vector<Block> blocks, int lambda,
                                        std::vector<BlockTag> tags = {});

    const FamilyParams& params() const { return params_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<BlockTag>& tags() const { return tags_; }
    const Block& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    BlockTag tag(int i) const { return tags_[static_cast<std::size_t>(i)]; }
    int m() const { return params_.m(); }
    int v() const { return params_.v.value(); }

    friend bool operator==(const DifferenceFamily& a, const DifferenceFamily& b) {
        return a.params_ == b.params_ && a.blocks_ == b.blocks_ && a.tags_ == b.tags_;
    }

private:
    FamilyParams params_;
    std::vector<Block> blocks_;
    std::vector<BlockTag> tags_;
};

struct ShiftFailure {
    int shift;
    int observed;
    int expected;
};

struct VerificationReport {
    bool params_ok = false;
    bool tags_ok = false;
    std::vector<ShiftFailure> failures;  // every nonzero shift whose sum is wrong
    std::vector<int> bad_tags;           // indices of blocks violating their tag

    bool passed() const { return params_ok && tags_ok && failures.empty(); }
};

// Counting identity sum k_i(k_i - 1) = lambda (v - 1).
bool check_params(const FamilyParams& p);

// Checks every nonzero shift, the tags, and the counting identity.
VerificationReport verify_family(const DifferenceFamily& f);

// For four-block families: sum k_i - lambda = v, which is equivalent to the
// PAF sums of the four rows vanishing at every nonzero shift once the
// family verifies. Throws unless m = 4.
bool gs_feasible(const FamilyParams& p);

// True iff both pieces verify as difference families with the stated
// lambdas. The partition must cover the block indices exactly once.
bool split_check(const DifferenceFamily& f, const std::array<std::vector<int>, 2>& partition,
                 std::pair<int, int> lambdas);

// Least family reachable by per-block translation, global unit
// multiplication, and permutation of equal-size blocks. Output tags are
// cleared: the minimizing transforms do not preserve them.
DifferenceFamily canonical_form(const DifferenceFamily& f);

// Same minimization without the unit action. Piece searches dedup with
// this weaker key: the global unit relating two assembled families cannot
// be normalized per piece, so piece-level unit dedup would lose results.
DifferenceFamily translation_canonical_form(const DifferenceFamily& f);

// Total order used for sorting and deduplicating canonical forms.
bool family_less(const DifferenceFamily& a, const DifferenceFamily& b);

}  // namespace hadamard
