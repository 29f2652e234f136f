#ifndef ZF_GUARD_FAMILIES_HH
#define ZF_GUARD_FAMILIES_HH 1

#include <zf/graph.hh>

#include <optional>
#include <vector>

/*
 * Named graph families and graph operations.
 *
 * Vertex numbering is part of the contract:
 *
 *   path(n)             0 - 1 - ... - n-1
 *   cycle(n)            path plus edge (n-1, 0)
 *   star(n)             0 is the centre, 1..n-1 are leaves
 *   wheel(n)            0 is the hub, 1..n-1 form the rim cycle in order
 *   supertriangle(n)    row r (0-based, r+1 vertices) is numbered left to
 *                       right after rows 0..r-1; (r,i) is adjacent to
 *                       (r,i+1), (r+1,i) and (r+1,i+1). Column i = 0 is the
 *                       left side, so {0, 1, 3, 6} is the left side of T_4.
 *   multipartite        parts occupy consecutive id ranges
 *   cartesian / strong  (u, v) gets id u * |h| + v
 *   corona(g, h)        g keeps 0..|g|-1; copy i of h is the block
 *                       |g| + i*|h| .. |g| + (i+1)*|h| - 1
 *   generalized_corona  as corona, block i has size |h_i|
 *   disjoint_union      g keeps its ids, h is shifted by |g|
 *   vertex_sum(g,v,h,w) g keeps its ids; h's vertices other than w follow in
 *                       increasing order; w becomes v
 *   pc_graph            see PCSpec
 */

namespace zf
{
    auto path(int n) -> Graph;
    auto cycle(int n) -> Graph;
    auto complete(int n) -> Graph;
    auto star(int n) -> Graph;
    auto wheel(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto supertriangle(int n) -> Graph;
    auto complete_multipartite(const std::vector<int> & parts) -> Graph;

    auto cartesian(const Graph & g, const Graph & h) -> Graph;
    auto strong(const Graph & g, const Graph & h) -> Graph;
    auto corona(const Graph & g, const Graph & h) -> Graph;
    auto generalized_corona(const Graph & g, const std::vector<Graph> & hs) -> Graph;
    auto disjoint_union(const Graph & g, const Graph & h) -> Graph;
    auto vertex_sum(const Graph & g, int v, const Graph & h, int w) -> Graph;

    /// A path P_m hung from vertex `at` of the PC path (1-based, so 2 means v_2).
    struct PCTail
    {
        int at;
        int length;

        friend auto operator== (const PCTail &, const PCTail &) -> bool = default;
    };

    /**
     * Parameters of a PC(n_1, ..., n_k) graph.
     *
     * The spine v_1..v_{k+2} gets ids 0..k+1. Cycle i closes the spine
     * segment v_i v_{i+1} v_{i+2} through n_i fresh vertices
     * v_{i+2} - u^i_1 - ... - u^i_{n_i} - v_i; with n_i = 0 it is the
     * triangle v_i v_{i+1} v_{i+2}. Fresh vertices are numbered cycle by
     * cycle from k+2. chords[i-1] lists the j (1-based) for which u^i_j is
     * also adjacent to v_{i+1}. An optional tail is vertex-summed on at one
     * end.
     */
    struct PCSpec
    {
        std::vector<int> n;
        std::vector<std::vector<int>> chords;
        std::optional<PCTail> tail;

        auto k() const -> int { return static_cast<int>(n.size()); }

        /// Throws InvalidSpec when the parameters are inconsistent.
        auto validate() const -> void;

        /// Id of spine vertex v_i, 1-based.
        auto spine(int i) const -> int { return i - 1; }

        /// Id of u^i_j, both 1-based.
        auto fresh(int i, int j) const -> int;

        auto order() const -> int;

        friend auto operator== (const PCSpec &, const PCSpec &) -> bool = default;
    };

    auto pc_graph(const PCSpec & spec) -> Graph;

    /// "PC(4,3,0)[chords:1@1]+P3@v2"-style display form.
    auto describe(const PCSpec & spec) -> std::string;
}

#endif
