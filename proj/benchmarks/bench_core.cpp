#include <benchmark/benchmark.h>

#include "pds/character.hpp"
#include "pds/constructors.hpp"
#include "pds/coset_choices.hpp"
#include "pds/graph.hpp"
#include "pds/group_ring.hpp"
#include "pds/search.hpp"

using namespace pds;

namespace {

const GroupTable& g192() {
    static GroupTable g = construct_from_spec("C4xC4xC2xC2", "g192");
    return g;
}

const GroupTable& c8xc8() {
    static GroupTable g = construct_from_spec("C8xC8", "c8xc8");
    return g;
}

std::vector<elem_t> real_pds() {
    const int ab[18][2] = {{1, 4}, {4, 1}, {2, 2}, {2, 4}, {4, 2}, {3, 1}, {1, 3}, {3, 4}, {5, 4},
                           {4, 3}, {4, 5}, {6, 4}, {4, 6}, {7, 4}, {4, 7}, {6, 6}, {7, 5}, {5, 7}};
    std::vector<elem_t> out;
    for (auto& e : ab) out.push_back(static_cast<elem_t>(e[0] * 8 + e[1]));
    return out;
}

void BM_ConvolveIndicator18(benchmark::State& state) {
    const GroupTable& g = c8xc8();
    RingVector d = RingVector::indicator(64, real_pds());
    for (auto _ : state) {
        RingVector sq = convolve(g, d, d);
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_ConvolveIndicator18);

void BM_PdsIdentityCheck(benchmark::State& state) {
    const GroupTable& g = c8xc8();
    PdsParams p = PdsParams::nlst(64, 18, 2, 6);
    auto d = real_pds();
    std::sort(d.begin(), d.end());
    for (auto _ : state) benchmark::DoNotOptimize(pds_identity_check(g, d, p));
}
BENCHMARK(BM_PdsIdentityCheck);

void BM_BuildChoiceDatabase(benchmark::State& state) {
    const GroupTable& g = g192();
    QuotientMap q = quotient_map(g, elementary_abelian_quotients(g, 3).front());
    for (auto _ : state) {
        CosetChoiceDB db = build_choices(g, q);
        benchmark::DoNotOptimize(db);
    }
}
BENCHMARK(BM_BuildChoiceDatabase);

void BM_StateAddRemoveCoset(benchmark::State& state) {
    const GroupTable& g = g192();
    PdsParams p = PdsParams::nlst(64, 18, 2, 6);
    QuotientMap q = quotient_map(g, elementary_abelian_quotients(g, 3).front());
    CosetChoiceDB db = build_choices(g, q);
    const auto& base = db.choices(0, 4)[0];
    const auto& set = db.choices(1, 4)[0];
    PartialState st(g, p);
    st.add_coset_set(base);
    for (auto _ : state) {
        st.add_coset_set(set);
        st.remove_coset_set(set);
    }
}
BENCHMARK(BM_StateAddRemoveCoset);

void BM_DeskSearch(benchmark::State& state) {
    GroupTable g = construct_from_spec("C4xC2xC2", "c4xc2xc2");
    PdsParams p = PdsParams::nlst(16, 5, 0, 2);
    for (auto _ : state) {
        SearchResult r = search_group(g, p, {});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DeskSearch);

void BM_Group192Search(benchmark::State& state) {
    const GroupTable& g = g192();
    PdsParams p = PdsParams::nlst(64, 18, 2, 6);
    for (auto _ : state) {
        SearchResult r = search_group(g, p, {});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Group192Search)->Unit(benchmark::kMillisecond);

void BM_SrgParams64(benchmark::State& state) {
    Graph g = cayley_graph(c8xc8(), real_pds());
    for (auto _ : state) benchmark::DoNotOptimize(srg_params(g));
}
BENCHMARK(BM_SrgParams64);

void BM_CanonicalFormSrg64(benchmark::State& state) {
    Graph g = cayley_graph(c8xc8(), real_pds());
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormSrg64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
