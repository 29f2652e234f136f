#ifndef ZF_GUARD_DSL_HH
#define ZF_GUARD_DSL_HH 1

#include <zf/graph.hh>

#include <iosfwd>
#include <string>
#include <string_view>

namespace zf
{
    /**
     * Builds a graph from a family term. Grammar (whitespace ignored):
     *
     *   term  := path(N) | cycle(N) | complete(N) | star(N) | wheel(N)
     *          | supertriangle(N) | empty(N) | multipartite(N,N,...)
     *          | cartesian(term,term) | strong(term,term) | corona(term,term)
     *          | union(term,term) | gencorona(term;term,term,...)
     *          | vsum(term,N,term,N)
     *          | pc(N,...)[chords:I@J,...]     chords optional, I cycle, J index
     *
     * Vertex numbering follows the family contracts in families.hh.
     * Throws ParseError with the offending offset.
     */
    auto parse_family_dsl(std::string_view text) -> Graph;

    /**
     * Edge-list text: optional "n <N>" header, then one "u v" per line,
     * '#' to end of line is a comment. Without a header n = max id + 1.
     */
    auto parse_edge_list(std::string_view text) -> Graph;

    /// Writes "n <N>" followed by the sorted edges; parse_edge_list reads it back.
    auto write_edge_list(std::ostream & out, const Graph & g) -> void;

    auto to_edge_list(const Graph & g) -> std::string;
}

#endif
