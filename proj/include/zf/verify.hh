#ifndef ZF_GUARD_VERIFY_HH
#define ZF_GUARD_VERIFY_HH 1

#include <zf/families.hh>
#include <zf/solver.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zf
{
    // ---- extremal form recognition ----------------------------------------

    enum class ExtremalKind
    {
        NotExtremal,
        DisconnectedCase,   // K_1 disjoint-union P_{n-1}
        PCForm,             // a PC graph without tail
        PCPlusTail          // a PC graph with a path of >= 2 vertices hung on a spine vertex
    };

    auto extremal_kind_name(ExtremalKind kind) -> std::string_view;

    struct ExtremalForm
    {
        ExtremalKind kind = ExtremalKind::NotExtremal;
        std::optional<PCSpec> spec;

        auto accepted() const -> bool { return kind != ExtremalKind::NotExtremal; }
    };

    struct RecognizerOptions
    {
        /**
         * Strict: tail-free forms must end in an empty cycle, PC(n_1,...,n_{k-1},0).
         * Otherwise any tail-free PC(n_1,...,n_k) is accepted (a tail of one vertex).
         */
        bool strict = true;

        /**
         * Only accept specs where the first cycle's fresh vertex next to v_1 is
         * also adjacent to v_2, and for k = 1 the one next to v_3 as well.
         * These are the shapes whose minimum connected propagation time is n-2.
         */
        bool minimum_time_chords = false;

        /// Also try hanging the tail on v_2 when k > 1 (v_{k+1} is always tried).
        bool tail_at_v2 = true;

        int limit = default_isomorphism_limit;
    };

    /**
     * Decides whether g is (up to isomorphism) a graph whose maximum
     * connected propagation time can be n-2: K_1 plus a path, a PC graph
     * ending in a triangle, or a PC graph with a hanging path. Works by
     * generating every PCSpec of matching order and size and testing
     * isomorphism, so the returned spec always rebuilds to a graph
     * isomorphic to g. Throws TooLarge above options.limit vertices.
     */
    auto recognize_extremal_form(const Graph & g, const RecognizerOptions & options = {}) -> ExtremalForm;

    // ---- claims ---------------------------------------------------------

    enum class Verdict
    {
        Holds,
        Violated,
        BudgetExceeded
    };

    auto verdict_name(Verdict v) -> std::string_view;

    /**
     * How `computed` relates to `expected`:
     *   Equal        every expected key equals the computed value
     *   AtMost       every computed value is <= the expected bound
     *   ZEqualsZc    computed z == computed z_c (expected unused)
     *   Property     a per-graph predicate over all graphs of an order;
     *                computed holds counts, counterexamples hold failures
     */
    enum class Relation
    {
        Equal,
        AtMost,
        ZEqualsZc,
        Property
    };

    auto relation_symbol(Relation r) -> std::string_view;

    using Values = std::map<std::string, long long>;

    struct Counterexample
    {
        std::string instance;
        int n = 0;
        std::vector<Edge> edges;
        Values computed;
        std::string detail;
    };

    struct ClaimResult
    {
        std::string claim;
        std::string instance;
        Relation relation = Relation::Equal;

        /// Closed-form parameter claims. Violations of these fail `verify`.
        bool hard = true;

        Values expected;
        Values computed;
        Verdict verdict = Verdict::Holds;
        long long violations = 0;
        std::vector<Counterexample> counterexamples;
    };

    /// Re-checks a counterexample from scratch. True when it still violates its claim.
    auto replay(const ClaimResult & claim, const Counterexample & ce, SolverOptions options = {}) -> bool;

    struct NamedRanges
    {
        int path_lo = 3, path_hi = 10;
        int cycle_lo = 3, cycle_hi = 10;
        int complete_lo = 2, complete_hi = 8;
        int wheel_lo = 4, wheel_hi = 9;
        int star_lo = 4, star_hi = 9;
        int supertriangle_lo = 2, supertriangle_hi = 4;
        int multipartite_max_total = 8;
    };

    /// Closed forms for named families and complete multipartite graphs.
    auto check_named_parameters(const NamedRanges & ranges = {}, SolverOptions options = {}) -> std::vector<ClaimResult>;

    struct ProductParams
    {
        std::vector<int> strong_cycle_n{ 3, 4, 5 }, strong_cycle_m{ 2, 3 };
        int strong_path_max = 4;
        std::vector<std::string> cartesian_bases{ "path(2)", "path(3)", "path(4)", "cycle(3)", "cycle(4)" };
        std::vector<int> cartesian_t{ 2, 3, 4 };
        std::vector<std::pair<std::string, std::string>> cartesian_pairs{
            { "path(3)", "cycle(4)" }, { "star(4)", "path(3)" }, { "cycle(3)", "complete(3)" } };
        std::vector<std::pair<std::string, std::vector<std::string>>> gencorona_instances{
            { "cycle(3)", { "path(2)", "path(2)", "path(2)" } },
            { "path(2)", { "path(2)", "path(2)" } },
            { "path(3)", { "cycle(4)", "complete(3)", "path(3)" } },
            { "path(2)", { "complete(3)", "path(3)" } },
            { "complete(1)", { "cycle(4)" } },
            { "cycle(4)", { "path(2)", "path(3)", "cycle(3)", "path(2)" } },
            { "path(3)", { "complete(1)", "complete(1)", "complete(1)" } },
            { "path(2)", { "empty(2)", "path(2)" } } };
        std::vector<std::pair<std::string, std::string>> corona_pairs{
            { "cycle(5)", "path(3)" }, { "path(3)", "cycle(6)" }, { "cycle(4)", "path(2)" },
            { "complete(3)", "complete(2)" }, { "path(4)", "complete(1)" }, { "star(4)", "path(2)" } };
        std::vector<int> corona_cycle_n{ 3, 4, 5 }, corona_cycle_m{ 2, 3 };
        std::vector<int> corona_path_n{ 1, 2, 3 }, corona_path_m{ 3, 4, 5, 6 };
    };

    /// Product bounds, generalized-corona equality, corona closed forms.
    auto check_product_bounds(const ProductParams & params = {}, SolverOptions options = {}) -> std::vector<ClaimResult>;

    struct ExhaustiveOptions
    {
        int n_max = 6;
        int jobs = 1;
        std::size_t max_counterexamples = 25;
        std::vector<std::string> claims;   // empty = all
    };

    /// Claim ids checked by exhaustive_small_graphs.
    auto exhaustive_claim_ids() -> std::vector<std::string>;

    /**
     * Every labeled graph on 1..n_max vertices, one aggregated ClaimResult per
     * (claim, order). The per-graph predicates are:
     *   z-le-zc                 Z <= Z_c
     *   path-characterization   on connected graphs, Z_c = 1, pt_c = n-1,
     *                           PT_c = n-1 and "is a path" agree
     *   max-connected-time      PT_c = n-2 iff the strict recognizer accepts
     *   min-connected-time      on connected graphs, pt_c = n-2 iff the strict
     *                           recognizer accepts with minimum_time_chords
     *   max-connected-time/extended   as max-connected-time, extended reading
     */
    auto exhaustive_small_graphs(const ExhaustiveOptions & options = {}) -> std::vector<ClaimResult>;

    /// Per-graph predicate behind an exhaustive claim; nullopt when it holds.
    auto check_small_graph(const std::string & claim, const Graph & g) -> std::optional<Counterexample>;

    /// Sorts by claim id then instance, the order every report uses.
    auto sort_results(std::vector<ClaimResult> & results) -> void;

    /// True when any hard claim is violated.
    auto any_hard_violation(const std::vector<ClaimResult> & results) -> bool;
}

#endif
