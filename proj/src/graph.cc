#include <zf/graph.hh>

#include <algorithm>
#include <functional>

using namespace zf;

auto zf::error_kind_name(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::EmptyVertexSet:     return "EmptyVertexSet";
        case ErrorKind::SelfLoop:           return "SelfLoop";
        case ErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
        case ErrorKind::EmptySet:           return "EmptySet";
        case ErrorKind::TooLarge:           return "TooLarge";
        case ErrorKind::OrderTooSmall:      return "OrderTooSmall";
        case ErrorKind::BadPartition:       return "BadPartition";
        case ErrorKind::CapacityExceeded:   return "CapacityExceeded";
        case ErrorKind::ArityMismatch:      return "ArityMismatch";
        case ErrorKind::InvalidSpec:        return "InvalidSpec";
        case ErrorKind::NotForcing:         return "NotForcing";
        case ErrorKind::BudgetExceeded:     return "BudgetExceeded";
        case ErrorKind::WrongSize:          return "WrongSize";
        case ErrorKind::ParseError:         return "ParseError";
    }
    return "Unknown";
}

auto zf::lex_less(const VertexSet & a, const VertexSet & b) -> bool
{
    auto i = a.begin(), j = b.begin();
    for ( ; i != a.end() && j != b.end() ; ++i, ++j)
        if (*i != *j)
            return *i < *j;
    return i == a.end() && j != b.end();
}

auto zf::to_string(const VertexSet & s) -> std::string
{
    std::string result = "{";
    bool first = true;
    for (int v : s) {
        if (! first)
            result += ",";
        result += std::to_string(v);
        first = false;
    }
    return result + "}";
}

Graph::Graph(int n, const std::vector<Edge> & edges) :
    _n(n)
{
    if (n < 1)
        throw Error(ErrorKind::EmptyVertexSet, "a graph needs at least one vertex");
    if (n > max_vertices)
        throw Error(ErrorKind::CapacityExceeded, "graph order " + std::to_string(n) + " exceeds "
                + std::to_string(max_vertices));

    _adj.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::EndpointOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v)
                    + ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        if (! _adj[u].test(v)) {
            _adj[u].set(v);
            _adj[v].set(u);
            ++_m;
        }
    }
}

auto Graph::min_degree() const -> int
{
    int result = _n;
    for (int v = 0 ; v < _n ; ++v)
        result = std::min(result, degree(v));
    return result;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(_m);
    for (int u = 0 ; u < _n ; ++u)
        for (int v : _adj[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::degree_sequence() const -> std::vector<int>
{
    std::vector<int> result(_n);
    for (int v = 0 ; v < _n ; ++v)
        result[v] = degree(v);
    return result;
}

auto Graph::with_labels(std::vector<std::string> labels) const -> Graph
{
    if (! labels.empty() && static_cast<int>(labels.size()) != _n)
        throw Error(ErrorKind::ArityMismatch, "label count does not match graph order");
    Graph result = *this;
    result._labels = std::move(labels);
    return result;
}

auto Graph::label(int v) const -> std::string
{
    return _labels.empty() ? std::to_string(v) : _labels[v];
}

auto zf::reachable_within(const Graph & g, int start, const VertexSet & within) -> VertexSet
{
    VertexSet seen, frontier;
    seen.set(start);
    frontier.set(start);
    while (! frontier.empty()) {
        VertexSet next;
        for (int v : frontier)
            next |= g.adjacency(v);
        next &= within;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

auto zf::components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    auto remaining = g.vertices();
    while (! remaining.empty()) {
        auto comp = reachable_within(g, remaining.first(), g.vertices());
        remaining -= comp;
        result.push_back(comp);
    }
    return result;
}

auto zf::is_connected(const Graph & g) -> bool
{
    return reachable_within(g, 0, g.vertices()) == g.vertices();
}

auto zf::is_connected_in_components(const Graph & g, const VertexSet & s) -> bool
{
    if (s.empty())
        throw Error(ErrorKind::EmptySet, "connectivity of an empty set is undefined");

    // A piece of s is connected iff growing inside s from its first vertex
    // covers exactly the part of s in that vertex's component.
    auto rest = s;
    while (! rest.empty()) {
        int start = rest.first();
        auto piece = reachable_within(g, start, s);
        auto comp = reachable_within(g, start, g.vertices());
        if (piece != (s & comp))
            return false;
        rest -= comp;
    }
    return true;
}

auto zf::induced_subgraph(const Graph & g, const VertexSet & s) -> InducedSubgraph
{
    if (s.empty())
        throw Error(ErrorKind::EmptySet, "cannot induce a subgraph on an empty set");

    std::vector<int> original = s.to_vector(), position(g.size(), -1);
    for (std::size_t i = 0 ; i < original.size() ; ++i)
        position[original[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (position[u] >= 0 && position[v] >= 0)
            edges.emplace_back(position[u], position[v]);

    return InducedSubgraph{ Graph(static_cast<int>(original.size()), edges), std::move(original) };
}

auto zf::is_path_graph(const Graph & g) -> bool
{
    if (! is_connected(g))
        return false;
    if (g.edge_count() != g.size() - 1)
        return false;
    for (int v = 0 ; v < g.size() ; ++v)
        if (g.degree(v) > 2)
            return false;
    return true;
}

auto zf::articulation_points(const Graph & g) -> VertexSet
{
    VertexSet result;
    for (int v = 0 ; v < g.size() ; ++v) {
        auto comp = reachable_within(g, v, g.vertices());
        if (comp.count() < 3)
            continue;
        comp.reset(v);
        if (reachable_within(g, comp.first(), comp) != comp)
            result.set(v);
    }
    return result;
}

auto zf::permute(const Graph & g, const std::vector<int> & perm) -> Graph
{
    if (static_cast<int>(perm.size()) != g.size())
        throw Error(ErrorKind::ArityMismatch, "permutation length does not match graph order");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph(g.size(), edges);
}

namespace
{
    // Sorted degrees of a vertex's neighbours; a cheap invariant that must
    // agree between a vertex and its image.
    auto neighbour_signature(const Graph & g, int v) -> std::vector<int>
    {
        std::vector<int> result;
        for (int w : g.adjacency(v))
            result.push_back(g.degree(w));
        std::sort(result.begin(), result.end());
        return result;
    }
}

auto zf::are_isomorphic(const Graph & g, const Graph & h, int limit) -> bool
{
    if (g.size() > limit || h.size() > limit)
        throw Error(ErrorKind::TooLarge, "isomorphism test limited to " + std::to_string(limit) + " vertices");

    if (g.size() != h.size() || g.edge_count() != h.edge_count())
        return false;

    int n = g.size();
    auto dg = g.degree_sequence(), dh = h.degree_sequence();
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh)
            return false;
    }

    std::vector<std::vector<int>> sig_g(n), sig_h(n);
    for (int v = 0 ; v < n ; ++v) {
        sig_g[v] = neighbour_signature(g, v);
        sig_h[v] = neighbour_signature(h, v);
    }

    // Visit g's vertices so that each one has as many already-placed
    // neighbours as possible; this makes adjacency pruning bite early.
    std::vector<int> order;
    VertexSet placed;
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_links = -1;
        for (int v = 0 ; v < n ; ++v) {
            if (placed.test(v))
                continue;
            int links = (g.adjacency(v) & placed).count();
            if (links > best_links || (links == best_links && dg[v] > dg[best])) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        placed.set(best);
    }

    std::vector<int> image(n, -1);
    VertexSet used;

    std::function<bool (int)> extend = [&] (int depth) -> bool {
        if (depth == n)
            return true;
        int v = order[depth];
        for (int w = 0 ; w < n ; ++w) {
            if (used.test(w) || dh[w] != dg[v] || sig_h[w] != sig_g[v])
                continue;
            bool consistent = true;
            for (int d = 0 ; d < depth && consistent ; ++d) {
                int u = order[d];
                if (g.adjacent(u, v) != h.adjacent(image[u], w))
                    consistent = false;
            }
            if (! consistent)
                continue;
            image[v] = w;
            used.set(w);
            if (extend(depth + 1))
                return true;
            used.reset(w);
            image[v] = -1;
        }
        return false;
    };

    return extend(0);
}
