#ifndef ZF_GUARD_GRAPH_HH
#define ZF_GUARD_GRAPH_HH 1

#include <zf/error.hh>
#include <zf/vertex_set.hh>

#include <string>
#include <utility>
#include <vector>

namespace zf
{
    using Edge = std::pair<int, int>;

    /**
     * Immutable simple undirected graph on vertices 0..n-1, 1 <= n <= 128.
     *
     * adjacency(v) is the open neighbourhood N(v). Construction normalises the
     * edge list: duplicates (in either orientation) collapse, self-loops and
     * out-of-range endpoints throw.
     */
    class Graph
    {
        public:
            Graph(int n, const std::vector<Edge> & edges);

            auto size() const -> int { return _n; }
            auto edge_count() const -> int { return _m; }

            auto adjacency(int v) const -> const VertexSet & { return _adj[v]; }

            auto closed_neighbourhood(int v) const -> VertexSet
            {
                auto result = _adj[v];
                result.set(v);
                return result;
            }

            auto adjacent(int u, int v) const -> bool { return _adj[u].test(v); }
            auto degree(int v) const -> int { return _adj[v].count(); }
            auto min_degree() const -> int;
            auto vertices() const -> VertexSet { return VertexSet::prefix(_n); }

            /// Edges with u < v, sorted.
            auto edges() const -> std::vector<Edge>;
            auto degree_sequence() const -> std::vector<int>;

            auto labels() const -> const std::vector<std::string> & { return _labels; }
            auto with_labels(std::vector<std::string> labels) const -> Graph;

            /// Display name of v: its label when present, its id otherwise.
            auto label(int v) const -> std::string;

            friend auto operator== (const Graph & a, const Graph & b) -> bool
            {
                return a._n == b._n && a._adj == b._adj;
            }

        private:
            int _n;
            int _m = 0;
            std::vector<VertexSet> _adj;
            std::vector<std::string> _labels;
    };

    /// Maximal connected vertex sets, ordered by their smallest vertex.
    auto components(const Graph & g) -> std::vector<VertexSet>;

    /// Vertices reachable from `start` using only vertices inside `within`.
    auto reachable_within(const Graph & g, int start, const VertexSet & within) -> VertexSet;

    auto is_connected(const Graph & g) -> bool;

    /**
     * True iff s meets every component in a connected piece: for each
     * component C with s∩C nonempty, g[s∩C] is connected. Components that s
     * misses do not count against it. Throws EmptySet for empty s.
     */
    auto is_connected_in_components(const Graph & g, const VertexSet & s) -> bool;

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<int> original;   // new id -> id in the parent graph
    };

    /// Relabels s to 0..|s|-1 preserving the relative order of ids.
    auto induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph;

    /// Connected and isomorphic to P_n (P_1 and P_2 included).
    auto is_path_graph(const Graph & g) -> bool;

    /// Vertices whose removal disconnects their component.
    auto articulation_points(const Graph & g) -> VertexSet;

    /// Applies new_id = perm[old_id].
    auto permute(const Graph & g, const std::vector<int> & perm) -> Graph;

    inline constexpr int default_isomorphism_limit = 16;

    /**
     * Exact isomorphism test by backtracking with degree and adjacency
     * pruning. Throws TooLarge when either graph has more than `limit`
     * vertices.
     */
    auto are_isomorphic(const Graph & g, const Graph & h, int limit = default_isomorphism_limit) -> bool;
}

#endif
