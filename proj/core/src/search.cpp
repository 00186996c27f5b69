#include "pds/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <thread>

namespace pds {

PartialState::PartialState(const GroupTable& g, const PdsParams& p)
    : G(&g), lambda(p.lambda), mu(p.mu),
      diff_counts(g.order, 0), member(g.order, 0) {}

void PartialState::bump(elem_t x) {
    std::int32_t c = ++diff_counts[x];
    if (x != 0) {
        if (c == mu + 1) ++mu_violations;
        if (member[x] && c == lambda + 1) ++lambda_violations;
    }
}

void PartialState::unbump(elem_t x) {
    std::int32_t c = diff_counts[x]--;
    if (x != 0) {
        if (c == mu + 1) --mu_violations;
        if (member[x] && c == lambda + 1) --lambda_violations;
    }
}

void PartialState::add_element(elem_t e) {
    assert(e != 0 && !member[e]);
    const GroupTable& g = *G;
    for (elem_t t : chosen) {
        bump(g.mul(e, t));
        bump(g.mul(t, e));
    }
    bump(g.mul(e, e));
    chosen.push_back(e);
    member[e] = 1;
    if (diff_counts[e] > lambda) ++lambda_violations;
}

void PartialState::remove_element(elem_t e) {
    assert(!chosen.empty() && chosen.back() == e);  // removal mirrors insertion
    const GroupTable& g = *G;
    if (diff_counts[e] > lambda) --lambda_violations;
    member[e] = 0;
    chosen.pop_back();
    unbump(g.mul(e, e));
    for (elem_t t : chosen) {
        unbump(g.mul(t, e));
        unbump(g.mul(e, t));
    }
}

void PartialState::add_coset_set(std::span<const elem_t> s) {
    for (elem_t e : s) add_element(e);
    ++depth;
}

void PartialState::remove_coset_set(std::span<const elem_t> s) {
    for (std::size_t i = s.size(); i-- > 0;) remove_element(s[i]);
    --depth;
}

PruneDecision prune_check(const PartialState& state, const PdsParams& p, const SearchConfig& cfg) {
    // evaluated from diff_counts directly; the engine keeps the same
    // predicates as O(1) counters, and tests cross-check the two
    const int n = state.G ? state.G->order : static_cast<int>(state.diff_counts.size());
    for (int e = 1; e < n; ++e) {
        if (state.diff_counts[e] > p.mu) return PruneDecision::Prune;
        if (cfg.strong_prune && state.member[e] && state.diff_counts[e] > p.lambda)
            return PruneDecision::Prune;
    }
    return PruneDecision::Keep;
}

VerifyOutcome verify_candidate(const GroupTable& G, std::span<const elem_t> D, const PdsParams& p) {
    if (!square_counts_check(G, D, p)) return VerifyOutcome::RejectedCounts;
    if (!pds_identity_check(G, D, p)) return VerifyOutcome::RejectedIdentity;
    return VerifyOutcome::Accepted;
}

namespace {

struct Shard {
    int dist = 0;          // index into the filtered distribution list
    int first_coset = 0;   // first coset with a nonzero count
    int first_choice = 0;  // fixed choice index at that coset
};

struct EngineContext {
    const GroupTable& G;
    const PdsParams& p;
    const SearchConfig& cfg;
    const CosetChoiceDB& db;
    const std::vector<Distribution>& dists;
    int ncosets;
    std::uint32_t checkpoint_mask;  // paper-faithful prune depths
    std::atomic<bool>* stop;
};

struct ShardOutput {
    std::vector<std::vector<elem_t>> found;
    SearchStats stats;
};

// leaf verification straight off the incremental counts; equivalent to
// square_counts_check + pds_identity_check on the assembled set
bool leaf_passes_counts(const PartialState& st, const PdsParams& p, int order) {
    if (st.diff_counts[0] != p.k) return false;
    std::int64_t at_lambda = 0, at_mu = 0;
    for (int e = 1; e < order; ++e) {
        if (st.diff_counts[e] == p.lambda) ++at_lambda;
        else if (st.diff_counts[e] == p.mu) ++at_mu;
    }
    return at_lambda == p.k && at_mu == p.v - p.k - 1;
}

bool leaf_passes_identity(const PartialState& st, const PdsParams& p, int order) {
    for (int e = 1; e < order; ++e)
        if (st.diff_counts[e] != (st.member[e] ? p.lambda : p.mu)) return false;
    return true;
}

void run_shard(const EngineContext& ctx, const Shard& shard, ShardOutput& out) {
    const Distribution& dist = ctx.dists[shard.dist];
    PartialState st(ctx.G, ctx.p);

    auto prune_after_add = [&](int depth1) {
        if (ctx.cfg.strong_prune) return st.mu_violations > 0 || st.lambda_violations > 0;
        if (ctx.checkpoint_mask & (1u << depth1)) return st.mu_violations > 0;
        return false;
    };

    // empty cosets ahead of the shard's fixed first choice
    for (int c = 0; c < shard.first_coset; ++c) st.add_coset_set({});

    const auto& first_list = ctx.db.choices(shard.first_coset, dist.counts[shard.first_coset]);
    st.add_coset_set(first_list[shard.first_choice]);
    if (prune_after_add(shard.first_coset + 1)) {
        ++out.stats.pruned_at_depth[shard.first_coset + 1];
        return;
    }

    const int ncosets = ctx.ncosets;
    std::vector<int> cursor(ncosets, 0);
    int depth = shard.first_coset + 1;  // cosets consumed

    auto leaf = [&]() {
        ++out.stats.candidates;
        if (!leaf_passes_counts(st, ctx.p, ctx.G.order)) return;
        if (!leaf_passes_identity(st, ctx.p, ctx.G.order)) return;
        std::vector<elem_t> elems(st.chosen.begin(), st.chosen.end());
        std::sort(elems.begin(), elems.end());
        out.found.push_back(std::move(elems));
        if (!ctx.cfg.emit_all && ctx.stop) ctx.stop->store(true, std::memory_order_relaxed);
    };

    if (depth == ncosets) { leaf(); }
    else {
        cursor[depth] = 0;
        while (depth > shard.first_coset) {
            if (ctx.stop && ctx.stop->load(std::memory_order_relaxed)) break;
            const auto& list = ctx.db.choices(depth, dist.counts[depth]);
            if (cursor[depth] >= static_cast<int>(list.size())) {
                // exhausted this coset, backtrack
                --depth;
                if (depth == shard.first_coset) break;
                const auto& prev = ctx.db.choices(depth, dist.counts[depth]);
                st.remove_coset_set(prev[cursor[depth]]);
                ++cursor[depth];
                continue;
            }
            st.add_coset_set(list[cursor[depth]]);
            if (prune_after_add(depth + 1)) {
                ++out.stats.pruned_at_depth[depth + 1];
                st.remove_coset_set(list[cursor[depth]]);
                ++cursor[depth];
                continue;
            }
            if (depth + 1 == ncosets) {
                leaf();
                st.remove_coset_set(list[cursor[depth]]);
                ++cursor[depth];
                continue;
            }
            ++depth;
            cursor[depth] = 0;
        }
    }
}

} // namespace

SearchResult search_group(const GroupTable& G, const PdsParams& p, const SearchConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const int m = cfg.image_exponent;

    auto quotients = elementary_abelian_quotients(G, m);
    if (quotients.empty())
        throw NoElementaryAbelianImageError("group " + G.id_label + " has no C2^" +
                                            std::to_string(m) + " image");
    const SubgroupHandle& N = quotients.front();
    QuotientMap Q = quotient_map(G, N);

    CharacterMatrix H = character_matrix(m);
    FeasibilityProfile prof = involution_profile(G, Q);
    std::vector<Distribution> dists =
        filter_distributions(enumerate_distributions(H, p), prof, cfg.filter);
    CosetChoiceDB db = build_choices(G, Q);

    const int ncosets = 1 << m;
    std::uint32_t checkpoint_mask = 0;
    for (int c : cfg.prune_checkpoints)
        if (c >= 1 && c <= ncosets) checkpoint_mask |= 1u << c;

    std::atomic<bool> stop{false};
    EngineContext ctx{G, p, cfg, db, dists, ncosets, checkpoint_mask, &stop};

    // shards: (distribution, choice at its first nonempty coset)
    std::vector<Shard> shards;
    for (int di = 0; di < static_cast<int>(dists.size()); ++di) {
        int first = 0;
        while (first < ncosets && dists[di].counts[first] == 0) ++first;
        if (first == ncosets) continue;  // k > 0 makes this unreachable
        const auto& list = db.choices(first, dists[di].counts[first]);
        for (int ci = 0; ci < static_cast<int>(list.size()); ++ci)
            shards.push_back({di, first, ci});
    }

    std::vector<ShardOutput> outputs(shards.size());
    for (auto& o : outputs) o.stats.pruned_at_depth.assign(ncosets + 1, 0);

    const int jobs = std::max(1, cfg.parallelism);
    if (jobs == 1) {
        for (std::size_t i = 0; i < shards.size(); ++i) {
            if (stop.load(std::memory_order_relaxed)) break;
            run_shard(ctx, shards[i], outputs[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= shards.size()) break;
                if (stop.load(std::memory_order_relaxed)) continue;
                run_shard(ctx, shards[i], outputs[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SearchResult res;
    res.group_id = G.id_label;
    res.chosen_subgroup = N.elements;
    res.distribution_count = static_cast<int>(dists.size());
    res.stats.pruned_at_depth.assign(ncosets + 1, 0);

    std::uint64_t found_per_dist = 0;
    int last_dist = -1;
    for (std::size_t i = 0; i < shards.size(); ++i) {
        const auto& o = outputs[i];
        res.stats.candidates += o.stats.candidates;
        for (int d = 0; d <= ncosets; ++d) res.stats.pruned_at_depth[d] += o.stats.pruned_at_depth[d];
        for (const auto& elems : o.found) {
            PdsRecord rec;
            rec.group_id = G.id_label;
            rec.elements = elems;
            rec.distribution = dists[shards[i].dist].counts;
            rec.eps = dists[shards[i].dist].eps;
            res.pds_list.push_back(std::move(rec));
        }
        if (cfg.on_progress && (i + 1 == shards.size() || shards[i + 1].dist != shards[i].dist)) {
            if (shards[i].dist != last_dist) { found_per_dist = 0; last_dist = shards[i].dist; }
            found_per_dist += o.found.size();
            ProgressEvent ev;
            ev.group_id = G.id_label;
            ev.distribution_index = shards[i].dist;
            ev.distribution_count = res.distribution_count;
            ev.candidates = res.stats.candidates;
            std::uint64_t pruned = 0;
            for (auto x : res.stats.pruned_at_depth) pruned += x;
            ev.pruned = pruned;
            ev.found = res.pds_list.size();
            cfg.on_progress(ev);
        }
    }

    std::sort(res.pds_list.begin(), res.pds_list.end(),
              [](const PdsRecord& a, const PdsRecord& b) { return a.elements < b.elements; });

    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace pds
