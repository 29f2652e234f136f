#include <doctest.h>

#include "oracle.hh"

#include <zf/dsl.hh>
#include <zf/families.hh>
#include <zf/verify.hh>

using namespace zf;

namespace
{
    auto find(const std::vector<ClaimResult> & results, const std::string & claim) -> std::vector<const ClaimResult *>
    {
        std::vector<const ClaimResult *> out;
        for (const auto & r : results)
            if (r.claim == claim)
                out.push_back(&r);
        return out;
    }

    auto rebuilds(const Graph & g, const ExtremalForm & form) -> bool
    {
        if (form.kind == ExtremalKind::DisconnectedCase)
            return are_isomorphic(g, disjoint_union(complete(1), path(g.size() - 1)));
        return form.spec && are_isomorphic(g, pc_graph(*form.spec));
    }
}

TEST_CASE("recognizer examples")
{
    auto k3 = recognize_extremal_form(complete(3));
    CHECK(k3.kind == ExtremalKind::PCForm);
    CHECK(k3.spec->n == std::vector<int>{ 0 });

    CHECK(recognize_extremal_form(path(5)).kind == ExtremalKind::NotExtremal);

    auto paw_like = vertex_sum(cycle(4), 0, path(2), 0);
    auto tailed = recognize_extremal_form(paw_like);
    CHECK(tailed.kind == ExtremalKind::PCPlusTail);
    CHECK(tailed.spec->n == std::vector<int>{ 1 });
    CHECK(tailed.spec->tail == PCTail{ 2, 2 });
    CHECK(rebuilds(paw_like, tailed));
    CHECK(solve_report(paw_like).PT_c->value == 3);

    auto split = recognize_extremal_form(disjoint_union(complete(1), path(3)));
    CHECK(split.kind == ExtremalKind::DisconnectedCase);
    CHECK(solve_report(disjoint_union(complete(1), path(3))).PT_c->value == 2);

    // C_4 is PC(1): only the extended reading takes tail-free forms not ending in a triangle
    CHECK(! recognize_extremal_form(cycle(4)).accepted());
    RecognizerOptions extended;
    extended.strict = false;
    auto c4 = recognize_extremal_form(cycle(4), extended);
    CHECK(c4.kind == ExtremalKind::PCForm);
    CHECK(c4.spec->n == std::vector<int>{ 1 });

    CHECK_THROWS_AS(recognize_extremal_form(path(17)), Error);
}

TEST_CASE("minimum time chord conditions")
{
    RecognizerOptions chords;
    chords.minimum_time_chords = true;

    // PC(3) chorded at both ends is also PC(2,0) chorded next to v_1
    auto g = pc_graph({ { 3 }, { { 1, 3 } }, {} });
    auto form = recognize_extremal_form(g, chords);
    CHECK(form.kind == ExtremalKind::PCForm);
    CHECK(describe(*form.spec) == "PC(2,0)[chords:1@2]");
    CHECK(solve_report(g).pt_c->value == 4);

    // one chord: rejected under the strict reading; the extended reading finds
    // PC(0,2), where the chord condition is vacuous, although pt_c = 3
    auto h = pc_graph({ { 3 }, { { 1 } }, {} });
    CHECK(! recognize_extremal_form(h, chords).accepted());
    chords.strict = false;
    CHECK(describe(*recognize_extremal_form(h, chords).spec) == "PC(0,2)");
    CHECK(solve_report(h).pt_c->value == 3);
}

TEST_CASE("recognizer is sound and relabel invariant")
{
    std::vector<Graph> graphs{ complete(3), pc_graph({ { 2, 0 }, {}, {} }), pc_graph({ { 1, 1, 0 }, { { 1 }, {}, {} }, {} }),
                               pc_graph({ { 2, 1 }, {}, PCTail{ 3, 3 } }), pc_graph({ { 0, 2 }, {}, PCTail{ 2, 2 } }),
                               disjoint_union(complete(1), path(5)) };
    std::mt19937 rng(4);
    for (const auto & g : graphs) {
        auto form = recognize_extremal_form(g);
        CHECK(form.accepted());
        CHECK(rebuilds(g, form));
        for (int i = 0 ; i < 5 ; ++i) {
            auto h = permute(g, oracle::random_permutation(rng, g.size()));
            auto relabeled = recognize_extremal_form(h);
            CHECK(relabeled.kind == form.kind);
            CHECK(rebuilds(h, relabeled));
        }
    }
    for (int trial = 0 ; trial < 300 ; ++trial) {
        auto g = oracle::random_graph(rng, 3 + trial % 6, 0.5);
        auto form = recognize_extremal_form(g);
        if (form.accepted())
            CHECK(rebuilds(g, form));
    }
}

TEST_CASE("named parameters, small ranges")
{
    NamedRanges r{ 3, 5, 3, 5, 2, 4, 4, 6, 4, 6, 2, 3, 5 };
    auto results = check_named_parameters(r);
    for (const auto & c : results)
        if (c.claim != "multipartite")
            CHECK_MESSAGE(c.verdict == Verdict::Holds, c.claim, " ", c.instance);

    // complete graphs and stars are the complete multipartite graphs the closed form misses
    for (const auto * c : find(results, "multipartite")) {
        bool all_ones = c->instance == "multipartite(1,1)" || c->instance == "multipartite(1,1,1)"
            || c->instance == "multipartite(1,1,1,1)" || c->instance == "multipartite(1,1,1,1,1)";
        bool star = c->instance == "multipartite(3,1)" || c->instance == "multipartite(4,1)";
        CHECK_MESSAGE((c->verdict == Verdict::Violated) == (all_ones || star), c->instance);
    }
    CHECK(any_hard_violation(results));
}

TEST_CASE("exhaustive checks on four vertices")
{
    ExhaustiveOptions o;
    o.n_max = 4;
    auto results = exhaustive_small_graphs(o);
    for (const auto * c : find(results, "z-le-zc"))
        CHECK(c->violations == 0);
    for (const auto * c : find(results, "path-characterization"))
        CHECK(c->violations == 0);
    for (const auto * c : find(results, "max-connected-time"))
        CHECK(c->violations == 0);
    auto four = find(results, "z-le-zc").back();
    CHECK(four->computed.at("graphs") == 64);

    long long extended = 0;
    for (const auto * c : find(results, "max-connected-time/extended"))
        extended += c->violations;
    CHECK(extended == 3);
    CHECK(! any_hard_violation(results));
}

TEST_CASE("counterexamples replay and survive relabeling")
{
    ExhaustiveOptions o;
    o.n_max = 5;
    o.max_counterexamples = 10;
    o.claims = { "max-connected-time", "min-connected-time" };
    auto results = exhaustive_small_graphs(o);
    std::mt19937 rng(8);
    int seen = 0;
    for (const auto & c : results)
        for (const auto & ce : c.counterexamples) {
            ++seen;
            CHECK(replay(c, ce));
            auto g = Graph(ce.n, ce.edges);
            auto again = check_small_graph(c.claim, g);
            REQUIRE(again);
            CHECK(again->detail == ce.detail);
            auto h = permute(g, oracle::random_permutation(rng, g.size()));
            CHECK(check_small_graph(c.claim, h).has_value());
        }
    CHECK(seen > 0);
}

TEST_CASE("exhaustive verdicts do not depend on labels")
{
    std::mt19937 rng(10);
    for (const auto & claim : exhaustive_claim_ids())
        for (int trial = 0 ; trial < 60 ; ++trial) {
            auto g = oracle::random_graph(rng, 2 + trial % 5, 0.5);
            auto h = permute(g, oracle::random_permutation(rng, g.size()));
            CHECK(check_small_graph(claim, g).has_value() == check_small_graph(claim, h).has_value());
        }
}

TEST_CASE("results sort by claim then instance")
{
    std::vector<ClaimResult> v(3);
    v[0].claim = "b"; v[0].instance = "x";
    v[1].claim = "a"; v[1].instance = "z";
    v[2].claim = "a"; v[2].instance = "y";
    sort_results(v);
    CHECK(v[0].instance == "y");
    CHECK(v[1].instance == "z");
    CHECK(v[2].claim == "b");
}
