#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "pds/constructors.hpp"
#include "pds/graph.hpp"
#include "pds/graph6.hpp"
#include "support/oracles.hpp"

using namespace pds;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

} // namespace

TEST_CASE("cayley_graph basics") {
    GroupTable c4 = cyclic(4);

    Graph empty = cayley_graph(c4, std::vector<elem_t>{});
    CHECK(empty.edge_count() == 0);

    std::vector<elem_t> all = {1, 2, 3};
    Graph k4 = cayley_graph(c4, all);  // complete graph
    CHECK(k4.edge_count() == 6);
    for (int i = 0; i < 4; ++i) CHECK(k4.degree(i) == 3);

    std::vector<elem_t> open = {1};  // inverse 3 missing
    CHECK_THROWS_AS(cayley_graph(c4, open), NotInverseClosedError);
    std::vector<elem_t> with_id = {0, 2};
    CHECK_THROWS_AS(cayley_graph(c4, with_id), NotInverseClosedError);
}

TEST_CASE("srg parameter detection") {
    auto pentagon = srg_params(cycle(5));
    REQUIRE(pentagon.has_value());
    CHECK(*pentagon == SrgParams{5, 2, 0, 1});

    CHECK_FALSE(srg_params(path(3)).has_value());   // irregular
    CHECK_FALSE(srg_params(cycle(6)).has_value());  // common counts deviate

    // feasibility identity on an accepted graph
    CHECK(pentagon->k * (pentagon->k - pentagon->lambda - 1) ==
          (pentagon->v - pentagon->k - 1) * pentagon->mu);
}

TEST_CASE("realPDS Cayley graph is the (64,18,2,6) strongly regular graph") {
    GroupTable g = test::make_c8xc8();
    Graph gr = cayley_graph(g, test::real_pds());
    CHECK(gr.n == 64);
    for (int v = 0; v < 64; ++v) CHECK(gr.degree(v) == 18);
    auto sp = srg_params(gr);
    REQUIRE(sp.has_value());
    CHECK(*sp == SrgParams{64, 18, 2, 6});
    CHECK(sp->k * (sp->k - sp->lambda - 1) == (sp->v - sp->k - 1) * sp->mu);
}

TEST_CASE("canonical_form is invariant under relabeling") {
    std::mt19937 rng(41);
    std::vector<Graph> specimens = {cycle(5), path(6), test::random_graph(10, 0.4, rng),
                                    test::random_graph(12, 0.7, rng)};
    for (const Graph& g : specimens) {
        std::string form = canonical_form(g);
        for (int t = 0; t < 5; ++t) {
            auto perm = test::random_permutation(g.n, rng);
            CHECK(canonical_form(relabel(g, perm)) == form);
        }
        // the canonical form is itself a graph6 encoding of an isomorphic graph
        Graph back = parse_graph6(form);
        CHECK(back.n == g.n);
        CHECK(back.edge_count() == g.edge_count());
    }
}

TEST_CASE("canonical_form handles a 64-vertex strongly regular graph") {
    GroupTable g = test::make_c8xc8();
    Graph gr = cayley_graph(g, test::real_pds());
    std::string form = canonical_form(gr);
    std::mt19937 rng(43);
    auto perm = test::random_permutation(64, rng);
    CHECK(canonical_form(relabel(gr, perm)) == form);
}

TEST_CASE("are_isomorphic agrees with exhaustive search on small graphs") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);  // 5..8
        Graph a = test::random_graph(n, 0.5, rng);
        // relabeled copy: always isomorphic
        Graph b = relabel(a, test::random_permutation(n, rng));
        CHECK(are_isomorphic(a, b));
        CHECK(test::isomorphic_exhaustive(a, b));
        // independent random graph: must agree with brute force either way
        Graph c = test::random_graph(n, 0.5, rng);
        CHECK(are_isomorphic(a, c) == test::isomorphic_exhaustive(a, c));
    }
    CHECK_FALSE(are_isomorphic(cycle(5), path(5)));
}

TEST_CASE("graph6 codec round trips") {
    CHECK(parse_graph6("@").n == 1);
    Graph k2 = parse_graph6("A_");
    CHECK(k2.n == 2);
    CHECK(k2.edge(0, 1));
    CHECK(emit_graph6(k2) == "A_");

    // pentagon: encode then decode
    CHECK(parse_graph6(emit_graph6(cycle(5))) == cycle(5));

    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng() % 70);  // crosses the long-form boundary at 63
        Graph g = test::random_graph(n, 0.3, rng);
        Graph back = parse_graph6(emit_graph6(g));
        REQUIRE(back == g);
    }
    // canonical encodings survive a byte-for-byte round trip
    Graph g64 = test::random_graph(64, 0.5, rng);
    std::string s = emit_graph6(g64);
    CHECK(s.substr(0, 1) == "~");
    CHECK(emit_graph6(parse_graph6(s)) == s);
}

TEST_CASE("catalog matching: canonical forms locate a graph in a graph6 file") {
    GroupTable c2_4 = construct_from_spec("C2xC2xC2xC2", "c2_4");
    std::vector<elem_t> frame = {1, 2, 4, 8, 15};
    Graph clebsch = cayley_graph(c2_4, frame);
    REQUIRE(srg_params(clebsch) == SrgParams{16, 5, 0, 2});

    std::mt19937 rng(59);
    auto path6 = std::filesystem::temp_directory_path() / "pds_test_catalog.g6";
    {
        std::ofstream out(path6);
        out << emit_graph6(relabel(clebsch, test::random_permutation(16, rng))) << "\n";
        out << emit_graph6(cycle(5)) << "\n\n";
        out << emit_graph6(test::random_graph(16, 0.5, rng)) << "\n";
    }
    auto graphs = read_graph6_file(path6.string());
    REQUIRE(graphs.size() == 3);
    std::set<std::string> forms;
    for (const Graph& g : graphs) forms.insert(canonical_form(g));
    CHECK(forms.count(canonical_form(clebsch)) == 1);
    Graph other = cayley_graph(c2_4, std::vector<elem_t>{1, 2, 3});
    CHECK(forms.count(canonical_form(other)) == 0);
    std::filesystem::remove(path6);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6Error);
    CHECK_THROWS_AS(parse_graph6("A"), MalformedGraph6Error);       // missing bit byte
    CHECK_THROWS_AS(parse_graph6("A_?"), MalformedGraph6Error);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("B\x20"), MalformedGraph6Error);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("\x7f"), MalformedGraph6Error);    // byte above 126
    CHECK_THROWS_AS(parse_graph6("~~????"), MalformedGraph6Error);  // oversized form
    CHECK_THROWS_AS(parse_graph6("~??"), MalformedGraph6Error);     // truncated header
    // nonzero padding: K2 with a stray low bit
    CHECK_THROWS_AS(parse_graph6("A`"), MalformedGraph6Error);
}
