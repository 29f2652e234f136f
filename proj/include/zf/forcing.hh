#ifndef ZF_GUARD_FORCING_HH
#define ZF_GUARD_FORCING_HH 1

#include <zf/graph.hh>

#include <optional>
#include <vector>

namespace zf
{
    /// forcer -> forced
    struct Force
    {
        int forcer;
        int forced;

        friend auto operator== (const Force &, const Force &) -> bool = default;
    };

    /**
     * All (u, v) with u black and v the only white neighbour of u, measured
     * against `black` as given. Several forcers of one vertex are all
     * reported, ordered by forced vertex then forcer.
     */
    auto forces_one_round(const Graph & g, const VertexSet & black) -> std::vector<Force>;

    /// The unique fixed point der(B) of the colour-change rule.
    auto derived_coloring(const Graph & g, const VertexSet & b) -> VertexSet;

    auto is_zfs(const Graph & g, const VertexSet & b) -> bool;
    auto is_czfs(const Graph & g, const VertexSet & b) -> bool;

    /**
     * Round-by-round record of simultaneous forcing from an initial set.
     * Each round holds one force per newly black vertex, the one with the
     * smallest forcer id, sorted by forced vertex.
     */
    struct ForcingTrace
    {
        VertexSet initial;
        std::vector<std::vector<Force>> rounds;
        VertexSet final;
        std::optional<int> pt;

        auto round_set(std::size_t r) const -> VertexSet;
    };

    auto propagation_trace(const Graph & g, const VertexSet & b) -> ForcingTrace;

    /// pt(G, B). Throws NotForcing when b is not a zero forcing set.
    auto propagation_time(const Graph & g, const VertexSet & b) -> int;

    /**
     * Round count of simultaneous forcing, or nullopt when it stalls short
     * of V. This is the kernel behind propagation_time and the solver: it
     * only rescans black vertices next to something that just turned black.
     */
    auto propagation_rounds(const Graph & g, const VertexSet & b) -> std::optional<int>;

    struct Propagation
    {
        VertexSet closure;     // der(B)
        int rounds;            // nonempty rounds performed
        bool complete;         // closure == V
    };

    /// Same kernel as propagation_rounds, keeping the closure.
    auto propagate(const Graph & g, const VertexSet & b) -> Propagation;
}

#endif
