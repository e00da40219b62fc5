#include "hadamard/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

namespace hadamard {

namespace {

using Clock = std::chrono::steady_clock;
using u64 = std::uint64_t;

constexpr u64 kSat = std::numeric_limits<u64>::max();

u64 sat_add(u64 a, u64 b) { return a > kSat - b ? kSat : a + b; }

// Orbits of H on Z_v, ordered by least element.
std::vector<Block> all_orbits(Modulus v, const std::vector<int>& subgroup) {
    validate_subgroup(v, subgroup);
    std::vector<Block> orbits;
    BitVec seen(v.value());
    for (int r = 0; r < v.value(); ++r) {
        if (seen.test(r)) continue;
        Block orb = expand_orbits({v, subgroup, {r}});
        orb.bits().for_each_set([&](int x) { seen.set(x); });
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

std::vector<Block> singleton_units(Modulus v) {
    std::vector<Block> out;
    out.reserve(static_cast<std::size_t>(v.value()));
    for (int x = 0; x < v.value(); ++x) out.push_back(Block::from_elements(v, {x}));
    return out;
}

// Merges each unit with its negation so every emitted union is symmetric.
std::vector<Block> negation_atoms(Modulus v, const std::vector<Block>& base) {
    std::vector<Block> atoms;
    std::vector<bool> used(base.size(), false);
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        Block neg = negate_block(base[i]);
        if (neg == base[i]) {
            atoms.push_back(base[i]);
            continue;
        }
        BitVec merged = base[i].bits();
        merged.or_with(neg.bits());
        for (std::size_t j = i + 1; j < base.size(); ++j) {
            if (!used[j] && base[j] == neg) used[j] = true;
        }
        atoms.push_back(Block(v, std::move(merged)));
    }
    return atoms;
}

// Enumerates subsets of pairwise-disjoint units with total size k; DFS in
// index order, include before exclude, so chosen-index sequences come out
// lexicographically.
struct SubsetSumGen {
    Modulus v;
    std::vector<Block> units;
    std::vector<int> sizes;
    std::vector<int> suffix_after;  // total unit size strictly after i
    int k = 0;

    std::vector<int> chosen;
    int need = 0;
    bool started = false;
    bool done = false;

    SubsetSumGen(Modulus v_, std::vector<Block> units_, int k_)
        : v(v_), units(std::move(units_)), k(k_) {
        sizes.reserve(units.size());
        for (const Block& b : units) sizes.push_back(b.size());
        suffix_after.assign(units.size() + 1, 0);
        for (std::size_t i = units.size(); i-- > 0;)
            suffix_after[i] = suffix_after[i + 1] + sizes[i];
        reset();
    }

    void reset() {
        chosen.clear();
        need = k;
        started = false;
        done = false;
    }

    u64 count() const {
        // ways[x] = number of subsets of the suffix summing to x
        std::vector<u64> ways(static_cast<std::size_t>(k) + 1, 0);
        ways[0] = 1;
        for (std::size_t i = units.size(); i-- > 0;) {
            for (int x = k; x >= sizes[i]; --x) {
                ways[static_cast<std::size_t>(x)] =
                    sat_add(ways[static_cast<std::size_t>(x)],
                            ways[static_cast<std::size_t>(x - sizes[i])]);
            }
        }
        return ways[static_cast<std::size_t>(k)];
    }

    bool advance() {
        if (done) return false;
        int from = 0;
        if (!started) {
            started = true;
            if (need == 0) return true;
        } else {
            if (chosen.empty()) {
                done = true;
                return false;
            }
            int last = chosen.back();
            chosen.pop_back();
            need += sizes[static_cast<std::size_t>(last)];
            from = last + 1;
        }
        while (true) {
            const int n = static_cast<int>(units.size());
            int placed_at = -1;
            for (int j = from; j < n; ++j) {
                const int sz = sizes[static_cast<std::size_t>(j)];
                if (sz <= need && need - sz <= suffix_after[static_cast<std::size_t>(j) + 1]) {
                    chosen.push_back(j);
                    need -= sz;
                    placed_at = j;
                    break;
                }
            }
            if (placed_at >= 0) {
                if (need == 0) return true;
                from = placed_at + 1;
                continue;
            }
            if (chosen.empty()) {
                done = true;
                return false;
            }
            int last = chosen.back();
            chosen.pop_back();
            need += sizes[static_cast<std::size_t>(last)];
            from = last + 1;
        }
    }

    Block current() const {
        BitVec bits(v.value());
        for (int j : chosen) bits.or_with(units[static_cast<std::size_t>(j)].bits());
        return Block(v, std::move(bits));
    }
};

// Picks one side of every (U, -U) pair; covers skew enumeration for both
// raw residue pairs and orbit pairs.
struct PairChoiceGen {
    Modulus v;
    std::vector<std::pair<Block, Block>> pairs;
    u64 counter = 0;
    bool started = false;

    PairChoiceGen(Modulus v_, std::vector<std::pair<Block, Block>> pairs_)
        : v(v_), pairs(std::move(pairs_)) {}

    void reset() {
        counter = 0;
        started = false;
    }

    u64 count() const {
        return pairs.size() >= 64 ? kSat : (u64{1} << pairs.size());
    }

    bool advance() {
        if (!started) {
            started = true;
            return true;
        }
        ++counter;
        if (pairs.size() >= 64) return true;
        return counter < (u64{1} << pairs.size());
    }

    Block current() const {
        BitVec bits(v.value());
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            const Block& side = ((counter >> j) & 1u) ? pairs[j].second : pairs[j].first;
            bits.or_with(side.bits());
        }
        return Block(v, std::move(bits));
    }
};

}  // namespace

struct BlockStream::Impl {
    Modulus v;
    int k;
    bool infeasible = false;
    u64 total = 0;
    std::optional<SubsetSumGen> subset;
    std::optional<PairChoiceGen> pair_choice;

    Impl(Modulus v_, int k_, const BlockConstraint& c) : v(v_), k(k_) {
        if (k < 0 || k > v.value()) {
            infeasible = true;
            return;
        }
        std::vector<Block> base =
            c.orbit_subgroup ? all_orbits(v, *c.orbit_subgroup) : singleton_units(v);
        switch (c.shape) {
            case BlockConstraint::Shape::none:
                subset.emplace(v, std::move(base), k);
                break;
            case BlockConstraint::Shape::symmetric:
                subset.emplace(v, negation_atoms(v, base), k);
                break;
            case BlockConstraint::Shape::skew: {
                // One side of each {U, -U}; the zero unit and self-negative
                // units make a covering without intersection impossible.
                std::vector<std::pair<Block, Block>> pairs;
                std::vector<bool> used(base.size(), false);
                int half_total = 0;
                for (std::size_t i = 0; i < base.size(); ++i) {
                    if (used[i]) continue;
                    used[i] = true;
                    if (base[i].contains(0)) {
                        if (base[i].size() != 1) infeasible = true;
                        continue;
                    }
                    Block neg = negate_block(base[i]);
                    if (neg == base[i]) {
                        infeasible = true;
                        break;
                    }
                    for (std::size_t j = i + 1; j < base.size(); ++j) {
                        if (!used[j] && base[j] == neg) used[j] = true;
                    }
                    half_total += base[i].size();
                    pairs.emplace_back(base[i], std::move(neg));
                }
                if (k != half_total) infeasible = true;
                if (!infeasible) pair_choice.emplace(v, std::move(pairs));
                break;
            }
        }
        if (infeasible) {
            total = 0;
        } else if (subset) {
            total = subset->count();
            if (total == 0) infeasible = true;
        } else {
            total = pair_choice->count();
        }
    }
};

BlockStream::BlockStream(Modulus v, int k, BlockConstraint c)
    : impl_(std::make_unique<Impl>(v, k, c)) {}

BlockStream::~BlockStream() = default;
BlockStream::BlockStream(BlockStream&&) noexcept = default;
BlockStream& BlockStream::operator=(BlockStream&&) noexcept = default;

bool BlockStream::infeasible() const { return impl_->infeasible; }

std::uint64_t BlockStream::total_count() const { return impl_->total; }

bool BlockStream::advance() {
    if (impl_->infeasible) return false;
    if (impl_->subset) return impl_->subset->advance();
    return impl_->pair_choice->advance();
}

Block BlockStream::current() const {
    if (impl_->subset) return impl_->subset->current();
    return impl_->pair_choice->current();
}

void BlockStream::reset() {
    if (impl_->subset) impl_->subset->reset();
    if (impl_->pair_choice) impl_->pair_choice->reset();
}

bool constraint_satisfied(const BlockConstraint& c, const Block& b) {
    switch (c.shape) {
        case BlockConstraint::Shape::skew:
            if (!is_skew(b)) return false;
            break;
        case BlockConstraint::Shape::symmetric:
            if (!is_symmetric_block(b)) return false;
            break;
        case BlockConstraint::Shape::none:
            break;
    }
    if (c.orbit_subgroup) {
        validate_subgroup(b.modulus(), *c.orbit_subgroup);
        // Union of H-orbits: membership is H-invariant.
        const std::vector<int> elems = b.elements();
        for (int x : elems) {
            for (int h : *c.orbit_subgroup) {
                if (!b.contains(static_cast<int>(static_cast<long long>(h) * x % b.v())))
                    return false;
            }
        }
    }
    return true;
}

Fingerprint fingerprint(const Block& x) {
    const int v = x.v();
    Fingerprint fp(static_cast<std::size_t>(v / 2));
    BitVec scratch(v);
    for (int s = 1; s <= v / 2; ++s) {
        x.bits().rotl_into(s, scratch);
        fp[static_cast<std::size_t>(s - 1)] = and_count(x.bits(), scratch);
    }
    return fp;
}

namespace {

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& fp) const {
        u64 h = 1469598103934665603ull;
        for (int x : fp) {
            h ^= static_cast<u64>(static_cast<unsigned>(x));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using FpIndex = std::unordered_map<Fingerprint, std::vector<Block>, FingerprintHash>;

enum class DedupMode { full_canonical, translation_canonical };

struct FamilyLess {
    bool operator()(const DifferenceFamily& a, const DifferenceFamily& b) const {
        return family_less(a, b);
    }
};

// Canonical-class -> least raw witness. Order-independent for exhaustive
// runs: the witness kept is the minimum over everything seen.
class Collector {
public:
    Collector(std::size_t max_results, DedupMode mode) : max_(max_results), mode_(mode) {}

    void add(const DifferenceFamily& raw) {
        DifferenceFamily key = mode_ == DedupMode::full_canonical
                                   ? canonical_form(raw)
                                   : translation_canonical_form(raw);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = classes_.find(key);
        if (it != classes_.end()) {
            if (family_less(raw, it->second)) it->second = raw;
            return;
        }
        if (classes_.size() >= max_) {
            hit_limit_ = true;
            return;
        }
        classes_.emplace(std::move(key), raw);
        if (classes_.size() >= max_) hit_limit_ = true;
    }

    bool hit_limit() const {
        std::lock_guard<std::mutex> lock(mu_);
        return hit_limit_;
    }

    std::vector<DifferenceFamily> witnesses() const {
        std::lock_guard<std::mutex> lock(mu_);
        std::vector<DifferenceFamily> out;
        out.reserve(classes_.size());
        for (const auto& [key, witness] : classes_) out.push_back(witness);
        return out;
    }

private:
    mutable std::mutex mu_;
    std::map<DifferenceFamily, DifferenceFamily, FamilyLess> classes_;
    std::size_t max_;
    DedupMode mode_;
    bool hit_limit_ = false;
};

struct EngineOutcome {
    std::vector<DifferenceFamily> families;
    u64 candidates = 0;
    bool exhausted = true;
};

BlockTag tag_for(const BlockConstraint& c) {
    switch (c.shape) {
        case BlockConstraint::Shape::skew: return BlockTag::skew;
        case BlockConstraint::Shape::symmetric: return BlockTag::symmetric;
        case BlockConstraint::Shape::none: break;
    }
    return BlockTag::none;
}

struct EngineCtx {
    const FamilyParams& params;
    const std::vector<BlockConstraint>& constraints;
    const std::vector<int>& ties;   // -1 or master position
    std::vector<int> mult;          // per position, 0 for slaves
    std::vector<int> free_pos;      // master positions
    std::vector<int> dfs_pos;       // free positions except the index one
    int index_pos = -1;
    int index_mult = 1;
    FpIndex index;
    std::vector<int> lb_suffix;     // at depth d: remaining min contribution
    std::vector<int> ub_suffix;
    int workers = 1;
    std::optional<Clock::time_point> deadline;
    std::atomic<bool> stop{false};
    std::atomic<u64> candidates{0};
    Collector* collector = nullptr;

    EngineCtx(const FamilyParams& p, const std::vector<BlockConstraint>& c,
              const std::vector<int>& t)
        : params(p), constraints(c), ties(t) {}
};

bool past_deadline(const EngineCtx& ctx) {
    return ctx.deadline && Clock::now() >= *ctx.deadline;
}

// One worker's depth-first walk over the non-index free positions; the
// outermost stream is strided across workers by position.
class DfsWorker {
public:
    DfsWorker(EngineCtx& ctx, int worker_id)
        : ctx_(ctx), worker_id_(worker_id), half_(ctx.params.v.value() / 2) {
        for (int pos : ctx_.dfs_pos) {
            streams_.emplace_back(ctx_.params.v, ctx_.params.k[static_cast<std::size_t>(pos)],
                                  ctx_.constraints[static_cast<std::size_t>(pos)]);
            blocks_.emplace_back(ctx_.params.v);
        }
        partial_.assign(static_cast<std::size_t>(half_), 0);
    }

    void run() {
        if (ctx_.dfs_pos.empty()) {
            if (worker_id_ == 0) leaf();
            return;
        }
        descend(0);
    }

private:
    bool stopped() {
        if (ctx_.stop.load(std::memory_order_relaxed)) return true;
        if (++ticks_ % 1024 == 0) {
            if (past_deadline(ctx_) || ctx_.collector->hit_limit()) {
                ctx_.stop.store(true, std::memory_order_relaxed);
                return true;
            }
        }
        return false;
    }

    void descend(int depth) {
        BlockStream& st = streams_[static_cast<std::size_t>(depth)];
        st.reset();
        const int pos = ctx_.dfs_pos[static_cast<std::size_t>(depth)];
        const int mult = ctx_.mult[static_cast<std::size_t>(pos)];
        u64 position = 0;
        while (st.advance()) {
            const u64 my = position++;
            if (depth == 0 && my % static_cast<u64>(ctx_.workers) !=
                                  static_cast<u64>(worker_id_))
                continue;
            if (stopped()) return;
            Block b = st.current();
            Fingerprint fb = fingerprint(b);
            bool ok = true;
            for (int s = 0; s < half_; ++s) {
                const int p = partial_[static_cast<std::size_t>(s)] +
                              mult * fb[static_cast<std::size_t>(s)];
                const int d = depth + 1;
                if (p + ctx_.lb_suffix[static_cast<std::size_t>(d)] > ctx_.params.lambda ||
                    p + ctx_.ub_suffix[static_cast<std::size_t>(d)] < ctx_.params.lambda) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (int s = 0; s < half_; ++s)
                partial_[static_cast<std::size_t>(s)] += mult * fb[static_cast<std::size_t>(s)];
            blocks_[static_cast<std::size_t>(depth)] = b;
            if (depth + 1 == static_cast<int>(ctx_.dfs_pos.size()))
                leaf();
            else
                descend(depth + 1);
            for (int s = 0; s < half_; ++s)
                partial_[static_cast<std::size_t>(s)] -= mult * fb[static_cast<std::size_t>(s)];
            if (ctx_.stop.load(std::memory_order_relaxed)) return;
        }
    }

    void leaf() {
        Fingerprint need(static_cast<std::size_t>(half_));
        for (int s = 0; s < half_; ++s) {
            const int rem = ctx_.params.lambda - partial_[static_cast<std::size_t>(s)];
            if (rem < 0 || rem % ctx_.index_mult != 0) return;
            need[static_cast<std::size_t>(s)] = rem / ctx_.index_mult;
        }
        auto it = ctx_.index.find(need);
        if (it == ctx_.index.end()) return;
        for (const Block& partner : it->second) {
            if (ctx_.stop.load(std::memory_order_relaxed)) return;
            emit(partner);
        }
    }

    void emit(const Block& partner) {
        const int m = ctx_.params.m();
        std::vector<Block> blocks;
        blocks.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) blocks.push_back(Block(ctx_.params.v));
        for (std::size_t d = 0; d < ctx_.dfs_pos.size(); ++d)
            blocks[static_cast<std::size_t>(ctx_.dfs_pos[d])] = blocks_[d];
        blocks[static_cast<std::size_t>(ctx_.index_pos)] = partner;
        for (int i = 0; i < m; ++i) {
            if (ctx_.ties[static_cast<std::size_t>(i)] >= 0)
                blocks[static_cast<std::size_t>(i)] =
                    blocks[static_cast<std::size_t>(ctx_.ties[static_cast<std::size_t>(i)])];
        }
        std::vector<BlockTag> tags;
        tags.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) tags.push_back(tag_for(ctx_.constraints[static_cast<std::size_t>(i)]));

        DifferenceFamily family(ctx_.params, std::move(blocks), std::move(tags));
        ctx_.candidates.fetch_add(1, std::memory_order_relaxed);
        if (!verify_family(family).passed()) return;
        ctx_.collector->add(family);
        if (ctx_.collector->hit_limit()) ctx_.stop.store(true, std::memory_order_relaxed);
    }

    EngineCtx& ctx_;
    int worker_id_;
    int half_;
    std::vector<BlockStream> streams_;
    std::vector<Block> blocks_;
    std::vector<int> partial_;
    u64 ticks_ = 0;
};

// Meet-in-the-middle over the free positions: the cheapest stream becomes
// the fingerprint index, the rest are walked depth-first with partial-sum
// pruning filtered through per-shift bounds.
EngineOutcome run_engine(const FamilyParams& params, const std::vector<BlockConstraint>& constraints,
                         const std::vector<int>& ties, const SearchLimits& limits,
                         std::optional<Clock::time_point> deadline, DedupMode dedup) {
    const int m = params.m();
    EngineCtx ctx(params, constraints, ties);
    ctx.workers = std::max(1, limits.workers);
    ctx.deadline = deadline;

    ctx.mult.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        int master = i;
        while (ties[static_cast<std::size_t>(master)] >= 0)
            master = ties[static_cast<std::size_t>(master)];
        ctx.mult[static_cast<std::size_t>(master)] += 1;
    }
    for (int i = 0; i < m; ++i) {
        if (ties[static_cast<std::size_t>(i)] < 0) ctx.free_pos.push_back(i);
    }

    // Stream feasibility and sizes decide the index side.
    std::vector<u64> counts;
    for (int pos : ctx.free_pos) {
        BlockStream st(params.v, params.k[static_cast<std::size_t>(pos)],
                       constraints[static_cast<std::size_t>(pos)]);
        if (st.infeasible()) return {};
        counts.push_back(st.total_count());
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < ctx.free_pos.size(); ++i) {
        if (counts[i] <= counts[best]) best = i;  // ties -> later position
    }
    ctx.index_pos = ctx.free_pos[best];
    ctx.index_mult = ctx.mult[static_cast<std::size_t>(ctx.index_pos)];
    if (counts[best] > limits.max_index)
        throw std::runtime_error(
            "search is beyond desk scale: smallest enumeration side has " +
            std::to_string(counts[best]) + " blocks (limit " +
            std::to_string(limits.max_index) + ")");
    for (int pos : ctx.free_pos) {
        if (pos != ctx.index_pos) ctx.dfs_pos.push_back(pos);
    }

    Collector collector(limits.max_results, dedup);
    ctx.collector = &collector;

    bool truncated = false;

    // Build the fingerprint index.
    {
        BlockStream st(params.v, params.k[static_cast<std::size_t>(ctx.index_pos)],
                       constraints[static_cast<std::size_t>(ctx.index_pos)]);
        u64 built = 0;
        while (st.advance()) {
            Block b = st.current();
            ctx.index[fingerprint(b)].push_back(std::move(b));
            if (++built % 4096 == 0 && past_deadline(ctx)) {
                truncated = true;
                break;
            }
        }
    }

    if (!truncated) {
        const int v = params.v.value();
        const int depths = static_cast<int>(ctx.dfs_pos.size());
        ctx.lb_suffix.assign(static_cast<std::size_t>(depths) + 1, 0);
        ctx.ub_suffix.assign(static_cast<std::size_t>(depths) + 1, 0);
        const int k_idx = params.k[static_cast<std::size_t>(ctx.index_pos)];
        ctx.lb_suffix[static_cast<std::size_t>(depths)] =
            ctx.index_mult * std::max(0, 2 * k_idx - v);
        ctx.ub_suffix[static_cast<std::size_t>(depths)] = ctx.index_mult * k_idx;
        for (int d = depths; d-- > 0;) {
            const int pos = ctx.dfs_pos[static_cast<std::size_t>(d)];
            const int k = params.k[static_cast<std::size_t>(pos)];
            const int mult = ctx.mult[static_cast<std::size_t>(pos)];
            ctx.lb_suffix[static_cast<std::size_t>(d)] =
                ctx.lb_suffix[static_cast<std::size_t>(d) + 1] + mult * std::max(0, 2 * k - v);
            ctx.ub_suffix[static_cast<std::size_t>(d)] =
                ctx.ub_suffix[static_cast<std::size_t>(d) + 1] + mult * k;
        }

        if (ctx.workers == 1) {
            DfsWorker(ctx, 0).run();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(ctx.workers));
            for (int w = 0; w < ctx.workers; ++w)
                pool.emplace_back([&ctx, w] { DfsWorker(ctx, w).run(); });
            for (auto& t : pool) t.join();
        }
        truncated = ctx.stop.load();
    }

    EngineOutcome out;
    out.families = collector.witnesses();
    out.candidates = ctx.candidates.load();
    out.exhausted = !truncated;
    return out;
}

std::optional<Clock::time_point> deadline_from(const SearchLimits& limits, Clock::time_point start) {
    if (!limits.time_budget) return std::nullopt;
    return start + *limits.time_budget;
}

void require_counting_identity(const FamilyParams& p) {
    if (!check_params(p)) {
        long long lhs = 0;
        for (int ki : p.k) lhs += static_cast<long long>(ki) * (ki - 1);
        throw std::invalid_argument(
            "counting identity fails: sum k_i(k_i-1) = " + std::to_string(lhs) +
            " but lambda(v-1) = " +
            std::to_string(static_cast<long long>(p.lambda) * (p.v.value() - 1)));
    }
}

}  // namespace

PairSearchResult find_pairs(Modulus v, int k0, int k1, int lambda, const BlockConstraint& c0,
                            const BlockConstraint& c1, const SearchLimits& limits) {
    FamilyParams params(v, {k0, k1}, lambda);
    require_counting_identity(params);
    EngineOutcome outcome = run_engine(params, {c0, c1}, {-1, -1}, limits,
                                       deadline_from(limits, Clock::now()),
                                       DedupMode::full_canonical);
    return {std::move(outcome.families), outcome.candidates, outcome.exhausted};
}

namespace {

void validate_assembly(const std::vector<DifferenceFamily>& pieces_a, int lambda_a,
                       const std::vector<DifferenceFamily>& pieces_b, int lambda_b,
                       const FamilyParams& target) {
    if (lambda_a + lambda_b != target.lambda)
        throw std::invalid_argument("lambda split " + std::to_string(lambda_a) + "+" +
                                    std::to_string(lambda_b) + " does not sum to lambda=" +
                                    std::to_string(target.lambda));
    if (target.m() == 4 && !gs_feasible(target))
        throw std::invalid_argument("target parameters fail the GS condition sum k - lambda = v");
    auto check_piece = [&](const DifferenceFamily& f, int lambda, std::size_t offset,
                           const char* side) {
        if (f.params().v != target.v || f.params().lambda != lambda)
            throw std::invalid_argument(std::string("piece on side ") + side +
                                        " has mismatched parameters");
        for (int i = 0; i < f.m(); ++i) {
            if (offset + static_cast<std::size_t>(i) >= target.k.size() ||
                f.params().k[static_cast<std::size_t>(i)] !=
                    target.k[offset + static_cast<std::size_t>(i)])
                throw std::invalid_argument(
                    std::string("piece sizes on side ") + side +
                    " do not concatenate to the target size sequence");
        }
    };
    for (const auto& f : pieces_a) check_piece(f, lambda_a, 0, "a");
    std::size_t offset = pieces_a.empty() ? 0 : static_cast<std::size_t>(pieces_a.front().m());
    for (const auto& f : pieces_b) check_piece(f, lambda_b, offset, "b");
    if (!pieces_a.empty() && !pieces_b.empty() &&
        pieces_a.front().m() + pieces_b.front().m() != target.m())
        throw std::invalid_argument("piece sizes do not concatenate to the target length");
}

u64 assemble_into(Collector& collector, const std::vector<DifferenceFamily>& pieces_a,
                  const std::vector<DifferenceFamily>& pieces_b, const FamilyParams& target,
                  const std::optional<Clock::time_point>& deadline, bool& truncated) {
    u64 tested = 0;
    for (const DifferenceFamily& a : pieces_a) {
        for (const DifferenceFamily& b : pieces_b) {
            ++tested;
            std::vector<Block> blocks = a.blocks();
            blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
            std::vector<BlockTag> tags = a.tags();
            tags.insert(tags.end(), b.tags().begin(), b.tags().end());
            DifferenceFamily joined(target, std::move(blocks), std::move(tags));
            if (!verify_family(joined).passed()) continue;
            collector.add(joined);
            if (collector.hit_limit()) {
                truncated = true;
                return tested;
            }
            if (tested % 1024 == 0 && deadline && Clock::now() >= *deadline) {
                truncated = true;
                return tested;
            }
        }
    }
    return tested;
}

}  // namespace

std::vector<DifferenceFamily> assemble_quadruples(const std::vector<DifferenceFamily>& pieces_a,
                                                  int lambda_a,
                                                  const std::vector<DifferenceFamily>& pieces_b,
                                                  int lambda_b, const FamilyParams& target) {
    validate_assembly(pieces_a, lambda_a, pieces_b, lambda_b, target);
    Collector collector(std::numeric_limits<std::size_t>::max(), DedupMode::full_canonical);
    bool truncated = false;
    assemble_into(collector, pieces_a, pieces_b, target, std::nullopt, truncated);
    return collector.witnesses();
}

SearchResult run_search(const SearchSpec& spec) {
    const auto start = Clock::now();
    const FamilyParams& params = spec.params;
    const int m = params.m();

    if (static_cast<int>(spec.constraints.size()) != m)
        throw std::invalid_argument("constraint count does not match block count");
    std::vector<int> ties = spec.ties;
    if (ties.empty()) ties.assign(static_cast<std::size_t>(m), -1);
    if (static_cast<int>(ties.size()) != m)
        throw std::invalid_argument("tie list length does not match block count");
    for (int i = 0; i < m; ++i) {
        const int t = ties[static_cast<std::size_t>(i)];
        if (t < -1 || t >= i)
            throw std::invalid_argument("tie for block " + std::to_string(i) +
                                        " must reference an earlier block");
        if (t >= 0) {
            if (ties[static_cast<std::size_t>(t)] >= 0)
                throw std::invalid_argument("tie target must be a free block");
            if (params.k[static_cast<std::size_t>(i)] != params.k[static_cast<std::size_t>(t)])
                throw std::invalid_argument("tied blocks must have equal sizes");
            const BlockConstraint& ci = spec.constraints[static_cast<std::size_t>(i)];
            if (!(ci == BlockConstraint{}) &&
                !(ci == spec.constraints[static_cast<std::size_t>(t)]))
                throw std::invalid_argument(
                    "a tied block may not carry its own distinct constraint");
        }
    }

    require_counting_identity(params);
    if (spec.require_gs_feasible) {
        if (m != 4)
            throw std::invalid_argument("the GS condition applies to four-block families only");
        if (!gs_feasible(params)) {
            long long ksum = std::accumulate(params.k.begin(), params.k.end(), 0LL);
            throw std::invalid_argument("GS condition fails: sum k - lambda = " +
                                        std::to_string(ksum - params.lambda) + " but v = " +
                                        std::to_string(params.v.value()));
        }
    }

    const auto deadline = deadline_from(spec.limits, start);
    SearchResult result;

    if (spec.split) {
        const PieceSplit& split = *spec.split;
        for (int i : ties) {
            if (i >= 0)
                throw std::invalid_argument("ties are not supported together with a piece split");
        }
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        for (const auto& part : split.parts) {
            if (part.size() != 2)
                throw std::invalid_argument("each piece must contain exactly two blocks");
            for (int i : part) {
                if (i < 0 || i >= m || seen[static_cast<std::size_t>(i)])
                    throw std::invalid_argument("piece split must partition the block indices");
                seen[static_cast<std::size_t>(i)] = true;
            }
        }
        if (m != 4) throw std::invalid_argument("piece splits apply to four-block families");

        SearchLimits piece_limits = spec.limits;
        piece_limits.max_results = std::numeric_limits<std::size_t>::max();

        bool truncated = false;
        std::array<EngineOutcome, 2> pieces;
        for (int side = 0; side < 2; ++side) {
            const auto& part = split.parts[static_cast<std::size_t>(side)];
            FamilyParams piece_params(
                params.v,
                {params.k[static_cast<std::size_t>(part[0])],
                 params.k[static_cast<std::size_t>(part[1])]},
                split.lambdas[static_cast<std::size_t>(side)]);
            require_counting_identity(piece_params);
            std::vector<BlockConstraint> piece_constraints{
                spec.constraints[static_cast<std::size_t>(part[0])],
                spec.constraints[static_cast<std::size_t>(part[1])]};
            // The second piece keeps unit variants so recombination with a
            // global unit stays exhaustive.
            pieces[static_cast<std::size_t>(side)] =
                run_engine(piece_params, piece_constraints, {-1, -1}, piece_limits, deadline,
                           side == 0 ? DedupMode::full_canonical
                                     : DedupMode::translation_canonical);
            truncated = truncated || !pieces[static_cast<std::size_t>(side)].exhausted;
            result.candidates_examined += pieces[static_cast<std::size_t>(side)].candidates;
        }

        // Reorder the assembled blocks back into position order.
        std::vector<int> order;
        order.insert(order.end(), split.parts[0].begin(), split.parts[0].end());
        order.insert(order.end(), split.parts[1].begin(), split.parts[1].end());
        std::vector<int> target_k;
        for (int i : order) target_k.push_back(params.k[static_cast<std::size_t>(i)]);
        FamilyParams assembled_params(params.v, target_k, params.lambda);

        Collector collector(spec.limits.max_results, DedupMode::full_canonical);
        result.candidates_examined += assemble_into(collector, pieces[0].families,
                                                    pieces[1].families, assembled_params,
                                                    deadline, truncated);
        std::vector<DifferenceFamily> assembled = collector.witnesses();
        if (order == std::vector<int>{0, 1, 2, 3}) {
            result.families = std::move(assembled);
        } else {
            // Permute blocks back when the split lists positions out of
            // order, then restore the canonical sort.
            for (const DifferenceFamily& f : assembled) {
                std::vector<Block> blocks;
                std::vector<BlockTag> tags;
                blocks.reserve(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) {
                    const auto at = static_cast<std::size_t>(
                        std::find(order.begin(), order.end(), i) - order.begin());
                    blocks.push_back(f.block(static_cast<int>(at)));
                    tags.push_back(f.tag(static_cast<int>(at)));
                }
                result.families.emplace_back(params, std::move(blocks), std::move(tags));
            }
            std::vector<std::pair<DifferenceFamily, std::size_t>> keyed;
            keyed.reserve(result.families.size());
            for (std::size_t i = 0; i < result.families.size(); ++i)
                keyed.emplace_back(canonical_form(result.families[i]), i);
            std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
                return family_less(a.first, b.first);
            });
            std::vector<DifferenceFamily> sorted;
            sorted.reserve(result.families.size());
            for (const auto& [key, idx] : keyed) sorted.push_back(result.families[idx]);
            result.families = std::move(sorted);
        }
        result.exhausted = !truncated;
    } else {
        EngineOutcome outcome = run_engine(params, spec.constraints, ties, spec.limits, deadline,
                                           DedupMode::full_canonical);
        result.families = std::move(outcome.families);
        result.candidates_examined = outcome.candidates;
        result.exhausted = outcome.exhausted;
    }

    result.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return result;
}

}  // namespace hadamard
