#include <doctest.h>

#include "oracle.hh"

#include <zf/families.hh>
#include <zf/forcing.hh>
#include <zf/solver.hh>

using namespace zf;

namespace
{
    auto set(std::initializer_list<int> v) { return VertexSet::from_ids(v); }

    auto round_sets(const ForcingTrace & t)
    {
        std::vector<std::vector<int>> out;
        for (std::size_t r = 0 ; r < t.rounds.size() ; ++r)
            out.push_back(t.round_set(r).to_vector());
        return out;
    }

    // Supertriangle ids of the letters used in the worked example:
    // a=0 g=1 k=2 h=3 r=4 l=5 c=6 i=7 j=8 b=9. C_8 runs a l b j i c h g.
    namespace t4 { constexpr int a = 0, g = 1, k = 2, h = 3, r = 4, l = 5, c = 6, i = 7, j = 8, b = 9; }
    namespace c8 { constexpr int a = 0, l = 1, b = 2, j = 3, i = 4, c = 5, h = 6, g = 7; }
}

TEST_CASE("single round forces")
{
    CHECK(forces_one_round(path(3), set({ 0 })) == std::vector<Force>{ { 0, 1 } });
    CHECK(forces_one_round(cycle(8), set({ c8::a, c8::g })) == std::vector<Force>{ { c8::a, c8::l }, { c8::g, c8::h } });
    CHECK(forces_one_round(complete(3), set({ 0 })).empty());
    // two forcers of one vertex are both listed
    CHECK(forces_one_round(path(3), set({ 0, 2 })) == std::vector<Force>{ { 0, 1 }, { 2, 1 } });
}

TEST_CASE("derived coloring")
{
    CHECK(derived_coloring(path(6), set({ 0 })) == VertexSet::prefix(6));
    CHECK(derived_coloring(wheel(5), VertexSet::prefix(5)) == VertexSet::prefix(5));
    CHECK(derived_coloring(complete(3), set({ 0 })) == set({ 0 }));
    CHECK(derived_coloring(path(3), VertexSet{}).empty());
}

TEST_CASE("zfs predicates")
{
    auto s6 = star(6);
    CHECK(is_zfs(s6, set({ 1, 2, 3, 4 })));
    CHECK(! is_czfs(s6, set({ 1, 2, 3, 4 })));
    CHECK(is_zfs(s6, set({ 0, 1, 2, 3, 4 })));
    CHECK(is_czfs(s6, set({ 0, 1, 2, 3, 4 })));
    CHECK(! is_zfs(cycle(8), set({ 0, 4 })));
    CHECK(derived_coloring(cycle(8), set({ 0, 4 })) == set({ 0, 4 }));
    CHECK(! is_zfs(path(2), VertexSet{}));
    CHECK(! is_czfs(path(2), VertexSet{}));
}

TEST_CASE("worked example traces")
{
    using namespace t4;
    auto t = propagation_trace(supertriangle(4), set({ a, g, h, c }));
    CHECK(t.pt == 4);
    CHECK(round_sets(t) == std::vector<std::vector<int>>{ { k, i }, { r }, { l, j }, { b } });
    CHECK(t.rounds[0] == std::vector<Force>{ { a, k }, { c, i } });

    auto u = propagation_trace(cycle(8), set({ c8::a, c8::g }));
    CHECK(u.pt == 3);
    CHECK(round_sets(u) == std::vector<std::vector<int>>{ { c8::l, c8::h }, { c8::b, c8::c }, { c8::j, c8::i } });

    auto w = propagation_trace(path(6), set({ 0 }));
    CHECK(w.pt == 5);
    CHECK(round_sets(w) == std::vector<std::vector<int>>{ { 1 }, { 2 }, { 3 }, { 4 }, { 5 } });
}

TEST_CASE("stalled trace")
{
    auto t = propagation_trace(cycle(8), set({ 0, 3 }));
    CHECK(! t.pt);
    CHECK(t.final != VertexSet::prefix(8));
    CHECK(t.rounds.empty());
    CHECK_THROWS_AS(propagation_time(cycle(8), set({ 0, 3 })), Error);
    CHECK(! propagation_rounds(cycle(8), set({ 0, 3 })));
    CHECK(propagate(cycle(8), set({ 0, 3 })).closure == set({ 0, 3 }));
}

TEST_CASE("propagation time")
{
    CHECK(propagation_time(wheel(5), VertexSet::prefix(5)) == 0);
    for (int n = 1 ; n <= 10 ; ++n)
        CHECK(propagation_time(path(n), set({ 0 })) == n - 1);
    auto w6 = wheel(6);
    auto b = zero_forcing_number(w6).witness;
    CHECK(b.count() == 3);
    CHECK(propagation_time(w6, b) == oracle::rounds(oracle::Matrix(w6), oracle::to_mask(b)));
}

TEST_CASE("kernel agrees with the naive scan")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> p_dist(0.1, 0.9);
    for (int trial = 0 ; trial < 1000 ; ++trial) {
        int n = 1 + trial % 14;
        auto g = oracle::random_graph(rng, n, p_dist(rng));
        oracle::Matrix m(g);
        std::uniform_int_distribution<oracle::Mask> pick(0, oracle::full(m));
        oracle::Mask seed = pick(rng);
        VertexSet b;
        for (int v = 0 ; v < n ; ++v)
            if (seed >> v & 1u)
                b.set(v);
        CHECK(oracle::to_mask(derived_coloring(g, b)) == oracle::closure(m, seed));
        CHECK(propagation_rounds(g, b) == oracle::rounds(m, seed));
        auto p = propagate(g, b);
        CHECK(p.complete == (p.closure == g.vertices()));
    }
}

TEST_CASE("monotone closure")
{
    std::mt19937 rng(5);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = 2 + trial % 10;
        auto g = oracle::random_graph(rng, n, 0.4);
        std::bernoulli_distribution coin(0.3);
        VertexSet b, bigger;
        for (int v = 0 ; v < n ; ++v) {
            if (coin(rng))
                b.set(v);
            if (b.test(v) || coin(rng))
                bigger.set(v);
        }
        CHECK(derived_coloring(g, b).subset_of(derived_coloring(g, bigger)));
        if (is_zfs(g, b)) {
            CHECK(is_zfs(g, bigger));
            CHECK(propagation_time(g, b) <= n - b.count());
        }
    }
}

TEST_CASE("trace invariants and replay")
{
    std::mt19937 rng(9);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = 1 + trial % 12;
        auto g = oracle::random_graph(rng, n, 0.35);
        std::bernoulli_distribution coin(0.35);
        VertexSet b;
        for (int v = 0 ; v < n ; ++v)
            if (coin(rng))
                b.set(v);
        auto t = propagation_trace(g, b);
        CHECK(t.initial == b);
        CHECK(t.pt.has_value() == (t.final == g.vertices()));
        if (t.pt)
            CHECK(*t.pt == static_cast<int>(t.rounds.size()));

        auto black = b;
        for (std::size_t r = 0 ; r < t.rounds.size() ; ++r) {
            CHECK(! t.rounds[r].empty());
            VertexSet fresh;
            for (auto [u, v] : t.rounds[r]) {
                CHECK(black.test(u));
                CHECK(! black.test(v));
                CHECK(! fresh.test(v));
                CHECK((g.adjacency(u) - black) == VertexSet::from_ids({ v }));
                fresh.set(v);
            }
            black |= fresh;
        }
        CHECK(black == t.final);
        CHECK(t.final == derived_coloring(g, b));
    }
}
