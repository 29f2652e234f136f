#ifndef ZF_GUARD_SOLVER_HH
#define ZF_GUARD_SOLVER_HH 1

#include <zf/forcing.hh>
#include <zf/graph.hh>

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace zf
{
    inline constexpr long long default_budget = 100'000'000;

    struct SolverOptions
    {
        /// Maximum number of candidate sets evaluated before giving up.
        long long budget = default_budget;

        /// Worker threads per candidate batch. Results do not depend on it.
        int jobs = 1;

        /// Skip candidates contained in the closure of a recently failed one.
        bool memo_failed = false;
    };

    /// Reads ZF_BUDGET when set, otherwise default_budget.
    auto budget_from_environment() -> long long;

    struct Witnessed
    {
        int value;
        VertexSet witness;
    };

    struct Extrema
    {
        int set_size;          // Z or Z_c
        long long count;       // number of minimum sets
        Witnessed min;
        Witnessed max;
    };

    struct SolveStats
    {
        long long closures = 0;     // candidate sets evaluated
        long long candidates = 0;   // candidate sets generated
        bool exceeded = false;
        double seconds = 0.0;
    };

    struct SolveReport
    {
        int n = 0;
        int m = 0;
        std::optional<Witnessed> z;
        std::optional<Witnessed> z_c;
        std::optional<Witnessed> pt;
        std::optional<Witnessed> PT;
        std::optional<Witnessed> pt_c;
        std::optional<Witnessed> PT_c;
        std::optional<long long> min_zfs_count;
        std::optional<long long> min_czfs_count;
        SolveStats stats;
    };

    /**
     * Exact search for minimum (connected) zero forcing sets.
     *
     * Candidates are scanned one size level at a time, in lexicographic
     * order, in fixed-size batches. A batch is split across `jobs` threads
     * and always evaluated in full, so witnesses and closure counts are the
     * same for any thread count. Plain levels start at max(1, min degree);
     * connected levels start at the number of components and are generated
     * per component by extension-set growth (each connected set is produced
     * once, from its smallest vertex), then combined across components.
     *
     * Every public member may throw BudgetExceeded. Completed levels are
     * cached, so asking for Z and then for pt(G) does not rescan.
     */
    class Solver
    {
        public:
            explicit Solver(const Graph & g, SolverOptions options = {});

            auto zero_forcing_number() -> Witnessed;
            auto connected_zero_forcing_number() -> Witnessed;

            /// Every minimum ZFS, lexicographic order. Throws WrongSize if k != Z(G).
            auto enumerate_min_zfs(int k) -> std::vector<VertexSet>;

            /// Every minimum CZFS, lexicographic order. Throws WrongSize if k != Z_c(G).
            auto enumerate_min_czfs(int k) -> std::vector<VertexSet>;

            /// pt/PT (or pt_c/PT_c) over all minimum sets with first-attaining witnesses.
            auto propagation_extrema(bool connected) -> Extrema;

            /// Runs everything; on budget exhaustion returns what was finished.
            auto report() -> SolveReport;

            auto stats() const -> const SolveStats & { return _stats; }

        private:
            struct Level
            {
                int size;
                std::vector<VertexSet> sets;   // minimum sets, lexicographic
                std::vector<int> rounds;       // pt of each
            };

            auto minimum_level(bool connected) -> const Level &;
            auto scan(const std::vector<VertexSet> & candidates, std::vector<int> & rounds) -> void;
            auto charge(long long evaluations, int level) -> void;
            auto connected_candidates(int k) -> std::vector<VertexSet>;
            auto connected_sets(std::size_t component, int size) -> const std::vector<VertexSet> &;

            const Graph & _g;
            SolverOptions _options;
            SolveStats _stats;
            std::vector<VertexSet> _components;
            std::map<std::pair<std::size_t, int>, std::vector<VertexSet>> _connected_cache;
            std::optional<Level> _plain, _connected;
    };

    auto zero_forcing_number(const Graph & g, SolverOptions options = {}) -> Witnessed;
    auto connected_zero_forcing_number(const Graph & g, SolverOptions options = {}) -> Witnessed;
    auto propagation_extrema(const Graph & g, bool connected, SolverOptions options = {}) -> Extrema;
    auto solve_report(const Graph & g, SolverOptions options = {}) -> SolveReport;

    /**
     * Connected subsets of `within` with exactly `size` vertices, each once,
     * in lexicographic order.
     */
    auto connected_subsets(const Graph & g, const VertexSet & within, int size) -> std::vector<VertexSet>;
}

#endif
