#include <doctest.h>

#include "oracle.hh"

#include <zf/dsl.hh>
#include <zf/families.hh>

#include <numeric>

using namespace zf;

namespace
{
    auto kind_of(auto && f) -> std::optional<ErrorKind>
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        return std::nullopt;
    }

    auto sorted_degrees(const Graph & g)
    {
        auto d = g.degree_sequence();
        std::sort(d.begin(), d.end());
        return d;
    }
}

TEST_CASE("named families")
{
    auto c8 = cycle(8);
    CHECK(c8.size() == 8);
    CHECK(c8.edge_count() == 8);
    CHECK(sorted_degrees(c8) == std::vector<int>(8, 2));
    CHECK(star(6).degree_sequence() == std::vector<int>{ 5, 1, 1, 1, 1, 1 });
    CHECK(wheel(6).degree_sequence() == std::vector<int>{ 5, 3, 3, 3, 3, 3 });
    CHECK(complete(4).edge_count() == 6);
    CHECK(empty_graph(3).edge_count() == 0);

    CHECK(kind_of([] { path(0); }) == ErrorKind::OrderTooSmall);
    CHECK(kind_of([] { cycle(2); }) == ErrorKind::OrderTooSmall);
    CHECK(kind_of([] { star(1); }) == ErrorKind::OrderTooSmall);
    CHECK(kind_of([] { wheel(3); }) == ErrorKind::OrderTooSmall);
}

TEST_CASE("supertriangle")
{
    auto t4 = supertriangle(4);
    CHECK(t4.size() == 10);
    CHECK(t4.edge_count() == 18);
    int corners = 0;
    for (int v = 0 ; v < 10 ; ++v)
        corners += t4.degree(v) == 2;
    CHECK(corners == 3);
    CHECK(supertriangle(1) == complete(1));
    CHECK(supertriangle(2) == complete(3));
    // left side of T_4
    CHECK(t4.adjacent(0, 1));
    CHECK(t4.adjacent(1, 3));
    CHECK(t4.adjacent(3, 6));
}

TEST_CASE("complete multipartite")
{
    auto k23 = complete_multipartite({ 2, 3 });
    CHECK(k23.size() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(complete_multipartite({ 1, 1, 1 }) == complete(3));
    auto k222 = complete_multipartite({ 2, 2, 2 });
    CHECK(k222.edge_count() == 12);
    CHECK(k222.degree_sequence() == std::vector<int>(6, 4));
    CHECK(kind_of([] { complete_multipartite({ 3 }); }) == ErrorKind::BadPartition);
    CHECK(kind_of([] { complete_multipartite({ 2, 0 }); }) == ErrorKind::BadPartition);
}

TEST_CASE("products")
{
    CHECK(are_isomorphic(cartesian(path(2), path(2)), cycle(4)));
    CHECK(strong(path(2), path(2)) == complete(4));
    auto s = strong(cycle(5), path(3));
    CHECK(s.size() == 15);
    // (u, v) -> u * |h| + v
    CHECK(s.adjacent(0 * 3 + 0, 1 * 3 + 1));
    CHECK(cartesian(cycle(5), path(3)).adjacent(4 * 3 + 2, 0 * 3 + 2));
}

TEST_CASE("corona")
{
    CHECK(corona(cycle(5), path(3)).size() == 20);
    CHECK(corona(path(3), cycle(6)).size() == 21);
    CHECK(corona(complete(1), complete(1)) == path(2));
    auto g = generalized_corona(path(2), { complete(1), complete(1) });
    CHECK(g.edges() == std::vector<Edge>{ { 0, 1 }, { 0, 2 }, { 1, 3 } });
    CHECK(are_isomorphic(g, path(4)));
    CHECK(generalized_corona(cycle(3), { path(2), path(2), path(2) }).size() == 9);
    CHECK(generalized_corona(complete(1), { cycle(4) }) == wheel(5));
    CHECK(kind_of([] { generalized_corona(path(2), { path(2) }); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("vertex sum")
{
    CHECK(vertex_sum(path(3), 2, path(3), 0) == path(5));
    auto paw = vertex_sum(complete(3), 1, path(2), 0);
    CHECK(paw.size() == 4);
    CHECK(paw.edge_count() == 4);
    CHECK(paw.degree(1) == 3);
    PCSpec pc2{ { 2 }, {}, {} };
    CHECK(vertex_sum(pc_graph(pc2), pc2.spine(3), path(3), 0).size() == 7);
    CHECK(kind_of([] { vertex_sum(path(2), 2, path(2), 0); }) == ErrorKind::EndpointOutOfRange);
}

TEST_CASE("pc graphs")
{
    CHECK(pc_graph({ { 0 }, {}, {} }) == complete(3));

    PCSpec pc3{ { 3 }, {}, {} };
    auto g = pc_graph(pc3);
    CHECK(g.size() == 6);
    CHECK(g.edge_count() == 6);
    CHECK(are_isomorphic(g, cycle(6)));
    CHECK(g.adjacent(pc3.spine(3), pc3.fresh(1, 1)));
    CHECK(g.adjacent(pc3.fresh(1, 3), pc3.spine(1)));

    PCSpec big{ { 4, 3, 5, 0, 2 }, {}, {} };
    CHECK(big.order() == 21);
    CHECK(pc_graph(big).size() == 21);

    PCSpec chorded{ { 3 }, { { 1, 3 } }, {} };
    auto h = pc_graph(chorded);
    CHECK(h.edge_count() == 8);
    CHECK(h.adjacent(chorded.fresh(1, 1), chorded.spine(2)));
    CHECK(describe(chorded) == "PC(3)[chords:1@1,1@3]");

    PCSpec tailed{ { 1, 0 }, {}, PCTail{ 3, 2 } };
    CHECK(pc_graph(tailed).size() == tailed.order());
    CHECK(describe(tailed) == "PC(1,0)+P2@v3");

    CHECK(kind_of([] { pc_graph({ {}, {}, {} }); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { pc_graph({ { 2 }, { { 3 } }, {} }); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { pc_graph({ { 2 }, {}, PCTail{ 2, 1 } }); }) == ErrorKind::InvalidSpec);
    CHECK(kind_of([] { pc_graph({ { 2 }, {}, PCTail{ 4, 2 } }); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("order and size formulas")
{
    std::vector<Graph> small{ path(1), path(3), cycle(4), star(4), complete(3), wheel(5) };
    for (const auto & g : small)
        for (const auto & h : small) {
            CHECK(corona(g, h).size() == g.size() * h.size() + g.size());
            CHECK(corona(g, h).edge_count() == g.edge_count() + g.size() * (h.edge_count() + h.size()));
            CHECK(cartesian(g, h).size() == g.size() * h.size());
            CHECK(strong(g, h).size() == g.size() * h.size());
            CHECK(vertex_sum(g, 0, h, h.size() - 1).size() == g.size() + h.size() - 1);

            auto c = cartesian(g, h), s = strong(g, h);
            for (auto [u, v] : c.edges())
                CHECK(s.adjacent(u, v));
            CHECK(s.edge_count() == c.edge_count() + 2 * g.edge_count() * h.edge_count());
        }
}

TEST_CASE("generalized corona with equal attachments is a corona")
{
    std::vector<Graph> small{ path(1), path(2), cycle(3), star(4), empty_graph(2) };
    for (const auto & g : small)
        for (const auto & h : small)
            CHECK(are_isomorphic(generalized_corona(g, std::vector<Graph>(g.size(), h)), corona(g, h), 32));
}

TEST_CASE("chordless pc graphs with nonempty cycles are 2-connected")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> k_dist(1, 4), n_dist(1, 3);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        PCSpec spec;
        int k = k_dist(rng);
        for (int i = 0 ; i < k ; ++i)
            spec.n.push_back(n_dist(rng));
        auto g = pc_graph(spec);
        CHECK(g.size() == k + 2 + std::accumulate(spec.n.begin(), spec.n.end(), 0));
        CHECK(is_connected(g));
        CHECK(articulation_points(g).empty());
    }
    // an empty cycle leaves its spine end hanging off a triangle, still 2-connected
    CHECK(articulation_points(pc_graph({ { 2, 0 }, {}, {} })).empty());
}
