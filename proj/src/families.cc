#include <zf/families.hh>

#include <numeric>

using namespace zf;

namespace
{
    auto require(bool ok, ErrorKind kind, const std::string & message) -> void
    {
        if (! ok)
            throw Error(kind, message);
    }

    auto check_capacity(long long order) -> void
    {
        require(order <= max_vertices, ErrorKind::CapacityExceeded,
                "result order " + std::to_string(order) + " exceeds " + std::to_string(max_vertices));
    }

    auto shifted(const Graph & g, int offset, std::vector<Edge> & into) -> void
    {
        for (auto [u, v] : g.edges())
            into.emplace_back(u + offset, v + offset);
    }
}

auto zf::path(int n) -> Graph
{
    require(n >= 1, ErrorKind::OrderTooSmall, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0 ; i + 1 < n ; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

auto zf::cycle(int n) -> Graph
{
    require(n >= 3, ErrorKind::OrderTooSmall, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0 ; i < n ; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

auto zf::complete(int n) -> Graph
{
    require(n >= 1, ErrorKind::OrderTooSmall, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

auto zf::star(int n) -> Graph
{
    require(n >= 2, ErrorKind::OrderTooSmall, "star needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 1 ; i < n ; ++i)
        edges.emplace_back(0, i);
    return Graph(n, edges);
}

auto zf::wheel(int n) -> Graph
{
    require(n >= 4, ErrorKind::OrderTooSmall, "wheel needs n >= 4");
    int rim = n - 1;
    std::vector<Edge> edges;
    for (int i = 0 ; i < rim ; ++i) {
        edges.emplace_back(0, 1 + i);
        edges.emplace_back(1 + i, 1 + (i + 1) % rim);
    }
    return Graph(n, edges);
}

auto zf::empty_graph(int n) -> Graph
{
    return Graph(n, {});
}

auto zf::supertriangle(int n) -> Graph
{
    require(n >= 1, ErrorKind::OrderTooSmall, "supertriangle needs n >= 1");
    check_capacity(static_cast<long long>(n) * (n + 1) / 2);

    auto id = [] (int row, int i) { return row * (row + 1) / 2 + i; };
    std::vector<Edge> edges;
    for (int r = 0 ; r < n ; ++r)
        for (int i = 0 ; i <= r ; ++i) {
            if (i < r)
                edges.emplace_back(id(r, i), id(r, i + 1));
            if (r + 1 < n) {
                edges.emplace_back(id(r, i), id(r + 1, i));
                edges.emplace_back(id(r, i), id(r + 1, i + 1));
            }
        }
    return Graph(n * (n + 1) / 2, edges);
}

auto zf::complete_multipartite(const std::vector<int> & parts) -> Graph
{
    require(parts.size() >= 2, ErrorKind::BadPartition, "complete multipartite graph needs at least two parts");
    for (int p : parts)
        require(p >= 1, ErrorKind::BadPartition, "every part needs at least one vertex");
    long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
    check_capacity(total);

    std::vector<int> part_of;
    for (std::size_t p = 0 ; p < parts.size() ; ++p)
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));

    std::vector<Edge> edges;
    for (int u = 0 ; u < static_cast<int>(total) ; ++u)
        for (int v = u + 1 ; v < static_cast<int>(total) ; ++v)
            if (part_of[u] != part_of[v])
                edges.emplace_back(u, v);
    return Graph(static_cast<int>(total), edges);
}

namespace
{
    auto product(const Graph & g, const Graph & h, bool with_diagonals) -> Graph
    {
        check_capacity(static_cast<long long>(g.size()) * h.size());
        int hn = h.size();
        std::vector<Edge> edges;
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = 0 ; v < hn ; ++v) {
                for (int v2 : h.adjacency(v))
                    edges.emplace_back(u * hn + v, u * hn + v2);
                for (int u2 : g.adjacency(u)) {
                    edges.emplace_back(u * hn + v, u2 * hn + v);
                    if (with_diagonals)
                        for (int v2 : h.adjacency(v))
                            edges.emplace_back(u * hn + v, u2 * hn + v2);
                }
            }
        return Graph(g.size() * hn, edges);
    }
}

auto zf::cartesian(const Graph & g, const Graph & h) -> Graph
{
    return product(g, h, false);
}

auto zf::strong(const Graph & g, const Graph & h) -> Graph
{
    return product(g, h, true);
}

auto zf::generalized_corona(const Graph & g, const std::vector<Graph> & hs) -> Graph
{
    require(static_cast<int>(hs.size()) == g.size(), ErrorKind::ArityMismatch,
            "generalized corona needs one attachment per vertex of the base graph");

    long long total = g.size();
    for (auto & h : hs)
        total += h.size();
    check_capacity(total);

    std::vector<Edge> edges = g.edges();
    int offset = g.size();
    for (int i = 0 ; i < g.size() ; ++i) {
        shifted(hs[i], offset, edges);
        for (int x = 0 ; x < hs[i].size() ; ++x)
            edges.emplace_back(i, offset + x);
        offset += hs[i].size();
    }
    return Graph(offset, edges);
}

auto zf::corona(const Graph & g, const Graph & h) -> Graph
{
    check_capacity(static_cast<long long>(g.size()) * h.size() + g.size());
    return generalized_corona(g, std::vector<Graph>(g.size(), h));
}

auto zf::disjoint_union(const Graph & g, const Graph & h) -> Graph
{
    check_capacity(static_cast<long long>(g.size()) + h.size());
    std::vector<Edge> edges = g.edges();
    shifted(h, g.size(), edges);
    return Graph(g.size() + h.size(), edges);
}

auto zf::vertex_sum(const Graph & g, int v, const Graph & h, int w) -> Graph
{
    require(v >= 0 && v < g.size() && w >= 0 && w < h.size(), ErrorKind::EndpointOutOfRange,
            "vertex sum endpoints must be vertices of their graphs");
    check_capacity(static_cast<long long>(g.size()) + h.size() - 1);

    std::vector<int> image(h.size());
    for (int x = 0, next = g.size() ; x < h.size() ; ++x)
        image[x] = (x == w) ? v : next++;

    std::vector<Edge> edges = g.edges();
    for (auto [a, b] : h.edges())
        edges.emplace_back(image[a], image[b]);
    return Graph(g.size() + h.size() - 1, edges);
}

auto PCSpec::validate() const -> void
{
    require(! n.empty(), ErrorKind::InvalidSpec, "PC graph needs at least one cycle");
    for (int ni : n)
        require(ni >= 0, ErrorKind::InvalidSpec, "PC cycle sizes must be nonnegative");
    require(chords.empty() || chords.size() == n.size(), ErrorKind::InvalidSpec,
            "PC chord list must have one entry per cycle");
    for (std::size_t i = 0 ; i < chords.size() ; ++i)
        for (int j : chords[i])
            require(j >= 1 && j <= n[i], ErrorKind::InvalidSpec,
                    "chord index " + std::to_string(j) + " out of range for cycle " + std::to_string(i + 1));
    if (tail) {
        require(tail->length >= 2, ErrorKind::InvalidSpec, "PC tail length must be at least 2");
        require(tail->at >= 1 && tail->at <= k() + 2, ErrorKind::InvalidSpec, "PC tail must attach to a spine vertex");
    }
}

auto PCSpec::fresh(int i, int j) const -> int
{
    int id = k() + 2;
    for (int c = 1 ; c < i ; ++c)
        id += n[c - 1];
    return id + j - 1;
}

auto PCSpec::order() const -> int
{
    int result = k() + 2 + std::accumulate(n.begin(), n.end(), 0);
    if (tail)
        result += tail->length - 1;
    return result;
}

auto zf::pc_graph(const PCSpec & spec) -> Graph
{
    spec.validate();
    int k = spec.k();
    int base_order = k + 2 + std::accumulate(spec.n.begin(), spec.n.end(), 0);
    check_capacity(spec.order());

    std::vector<Edge> edges;
    for (int i = 1 ; i <= k + 1 ; ++i)
        edges.emplace_back(spec.spine(i), spec.spine(i + 1));

    for (int i = 1 ; i <= k ; ++i) {
        int ni = spec.n[i - 1];
        int vi = spec.spine(i), vmid = spec.spine(i + 1), vnext = spec.spine(i + 2);
        if (ni == 0) {
            // triangle: re-lists two spine edges, collapsed by Graph
            edges.emplace_back(vi, vmid);
            edges.emplace_back(vmid, vnext);
            edges.emplace_back(vnext, vi);
            continue;
        }
        edges.emplace_back(vnext, spec.fresh(i, 1));
        for (int j = 1 ; j < ni ; ++j)
            edges.emplace_back(spec.fresh(i, j), spec.fresh(i, j + 1));
        edges.emplace_back(spec.fresh(i, ni), vi);
        if (! spec.chords.empty())
            for (int j : spec.chords[i - 1])
                edges.emplace_back(spec.fresh(i, j), vmid);
    }

    Graph base(base_order, edges);
    if (! spec.tail)
        return base;
    return vertex_sum(base, spec.spine(spec.tail->at), path(spec.tail->length), 0);
}

auto zf::describe(const PCSpec & spec) -> std::string
{
    std::string result = "PC(";
    for (std::size_t i = 0 ; i < spec.n.size() ; ++i)
        result += (i ? "," : "") + std::to_string(spec.n[i]);
    result += ")";

    std::string chords;
    for (std::size_t i = 0 ; i < spec.chords.size() ; ++i)
        for (int j : spec.chords[i])
            chords += (chords.empty() ? "" : ",") + std::to_string(i + 1) + "@" + std::to_string(j);
    if (! chords.empty())
        result += "[chords:" + chords + "]";

    if (spec.tail)
        result += "+P" + std::to_string(spec.tail->length) + "@v" + std::to_string(spec.tail->at);
    return result;
}
