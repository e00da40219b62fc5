#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "hadamard/family.hpp"

// Desk-scale discovery of difference families with prescribed parameters
// and per-block constraints: constrained block enumeration, folded
// difference-count fingerprints, and meet-in-the-middle pairing against a
// fingerprint index. Exhaustive runs return the same family set (up to the
// canonical-form dedup key) for any worker count.

namespace hadamard {

struct BlockConstraint {
    enum class Shape { none, skew, symmetric };
    Shape shape = Shape::none;
    // When set, the block must be a union of orbits of this subgroup.
    std::optional<std::vector<int>> orbit_subgroup;

    friend bool operator==(const BlockConstraint&, const BlockConstraint&) = default;
};

// Direct predicate check, independent of how blocks get enumerated.
bool constraint_satisfied(const BlockConstraint& c, const Block& b);

struct SearchLimits {
    std::size_t max_results = std::numeric_limits<std::size_t>::max();
    std::optional<std::chrono::milliseconds> time_budget;
    int workers = 1;
    // Largest block count allowed on the fingerprint-index side.
    std::size_t max_index = std::size_t{1} << 22;
};

struct PieceSplit {
    std::array<std::vector<int>, 2> parts;
    std::array<int, 2> lambdas;
};

struct SearchSpec {
    FamilyParams params;
    std::vector<BlockConstraint> constraints;  // one per block
    // ties[i] = j (< i) forces blocks[i] = blocks[j]; -1 leaves i free.
    std::vector<int> ties;
    std::optional<PieceSplit> split;
    bool require_gs_feasible = false;
    SearchLimits limits;
};

struct SearchResult {
    // One witness per canonical class, sorted by canonical form. Witnesses
    // are the least raw family found in each class, so exhaustive result
    // sets do not depend on enumeration partitioning.
    std::vector<DifferenceFamily> families;
    std::uint64_t candidates_examined = 0;
    std::chrono::milliseconds elapsed{0};
    bool exhausted = true;
};

// Streams every size-k block satisfying the constraint exactly once, in a
// deterministic order. Structurally impossible combinations (skew with the
// wrong cardinality, no pair decomposition, ...) give an empty stream that
// reports infeasible().
class BlockStream {
public:
    BlockStream(Modulus v, int k, BlockConstraint c);
    ~BlockStream();
    BlockStream(BlockStream&&) noexcept;
    BlockStream& operator=(BlockStream&&) noexcept;

    bool infeasible() const;
    // Exact stream cardinality, saturating at 2^64-1.
    std::uint64_t total_count() const;

    // Step to the next block; false once exhausted.
    bool advance();
    // The block at the current position (only after a successful advance).
    Block current() const;

    std::optional<Block> next() {
        if (!advance()) return std::nullopt;
        return current();
    }

    void reset();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Folded difference counts (d_X(1), ..., d_X(floor(v/2))); valid because
// d_X(s) = d_X(v-s).
using Fingerprint = std::vector<int>;
Fingerprint fingerprint(const Block& x);

struct PairSearchResult {
    std::vector<DifferenceFamily> families;  // as in SearchResult
    std::uint64_t candidates_examined = 0;
    bool exhausted = true;
};

// Meet-in-the-middle search for two-block families (v; k0, k1; lambda):
// index one side by fingerprint, stream the other side against the
// complementary fingerprint. Throws if the counting identity fails.
PairSearchResult find_pairs(Modulus v, int k0, int k1, int lambda, const BlockConstraint& c0,
                            const BlockConstraint& c1, const SearchLimits& limits = {});

// Concatenates pieces into four-block families for the target parameters,
// keeping only concatenations that verify, deduplicated by canonical form.
// Throws if the lambda split or the size concatenation is inconsistent
// with the target, or if the target fails gs_feasible.
std::vector<DifferenceFamily> assemble_quadruples(const std::vector<DifferenceFamily>& pieces_a,
                                                  int lambda_a,
                                                  const std::vector<DifferenceFamily>& pieces_b,
                                                  int lambda_b, const FamilyParams& target);

SearchResult run_search(const SearchSpec& spec);

}  // namespace hadamard
