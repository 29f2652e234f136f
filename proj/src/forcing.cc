#include <zf/forcing.hh>

#include <algorithm>

using namespace zf;

namespace
{
    // One simultaneous round restricted to the `candidates` forcers.
    // Returns the newly black vertices.
    auto round_from(const Graph & g, const VertexSet & black, const VertexSet & candidates) -> VertexSet
    {
        VertexSet white = g.vertices() - black, result;
        for (int u : candidates) {
            auto w = g.adjacency(u) & white;
            if (w.singleton())
                result |= w;
        }
        return result;
    }

    // Black vertices whose white neighbourhood may have changed.
    auto touched(const Graph & g, const VertexSet & fresh, const VertexSet & black) -> VertexSet
    {
        auto result = fresh;
        for (int v : fresh)
            result |= g.adjacency(v);
        return result & black;
    }
}

auto zf::forces_one_round(const Graph & g, const VertexSet & black) -> std::vector<Force>
{
    std::vector<Force> result;
    auto white = g.vertices() - black;
    for (int u : black) {
        auto w = g.adjacency(u) & white;
        if (w.singleton())
            result.push_back(Force{ u, w.first() });
    }
    std::sort(result.begin(), result.end(), [] (const Force & a, const Force & b) {
            return a.forced != b.forced ? a.forced < b.forced : a.forcer < b.forcer; });
    return result;
}

auto zf::derived_coloring(const Graph & g, const VertexSet & b) -> VertexSet
{
    auto black = b & g.vertices();
    auto dirty = black;
    while (! dirty.empty()) {
        auto fresh = round_from(g, black, dirty);
        black |= fresh;
        dirty = touched(g, fresh, black);
    }
    return black;
}

auto zf::propagate(const Graph & g, const VertexSet & b) -> Propagation
{
    auto all = g.vertices();
    auto black = b & all;
    auto dirty = black;
    int rounds = 0;
    while (black != all) {
        auto fresh = round_from(g, black, dirty);
        if (fresh.empty())
            break;
        black |= fresh;
        dirty = touched(g, fresh, black);
        ++rounds;
    }
    return Propagation{ black, rounds, black == all };
}

auto zf::propagation_rounds(const Graph & g, const VertexSet & b) -> std::optional<int>
{
    auto p = propagate(g, b);
    if (! p.complete)
        return std::nullopt;
    return p.rounds;
}

auto zf::is_zfs(const Graph & g, const VertexSet & b) -> bool
{
    return derived_coloring(g, b) == g.vertices();
}

auto zf::is_czfs(const Graph & g, const VertexSet & b) -> bool
{
    return ! b.empty() && is_zfs(g, b) && is_connected_in_components(g, b);
}

auto ForcingTrace::round_set(std::size_t r) const -> VertexSet
{
    VertexSet result;
    for (auto & f : rounds.at(r))
        result.set(f.forced);
    return result;
}

auto zf::propagation_trace(const Graph & g, const VertexSet & b) -> ForcingTrace
{
    ForcingTrace trace;
    trace.initial = b & g.vertices();
    auto black = trace.initial;

    while (true) {
        auto forces = forces_one_round(g, black);
        if (forces.empty())
            break;
        std::vector<Force> round;
        for (auto & f : forces)
            if (round.empty() || round.back().forced != f.forced)
                round.push_back(f);
        for (auto & f : round)
            black.set(f.forced);
        trace.rounds.push_back(std::move(round));
    }

    trace.final = black;
    if (black == g.vertices())
        trace.pt = static_cast<int>(trace.rounds.size());
    return trace;
}

auto zf::propagation_time(const Graph & g, const VertexSet & b) -> int
{
    auto rounds = propagation_rounds(g, b);
    if (! rounds)
        throw Error(ErrorKind::NotForcing, to_string(b) + " is not a zero forcing set");
    return *rounds;
}
