#ifndef ZF_GUARD_REPORT_HH
#define ZF_GUARD_REPORT_HH 1

#include <zf/forcing.hh>
#include <zf/solver.hh>
#include <zf/verify.hh>

#include <json.hpp>

#include <iosfwd>
#include <vector>

namespace zf
{
    using json = nlohmann::ordered_json;

    auto to_json(const VertexSet & s) -> json;

    /// {initial, rounds: [[{forcer, forced}]], final, pt}; pt is null when b does not force.
    auto to_json(const ForcingTrace & trace) -> json;

    /**
     * {n, m, z, z_c, pt, PT, pt_c, PT_c, witnesses: {...}, counts: {min_zfs, min_czfs},
     *  budget: {closures, exceeded}}. Unfinished values are null. Timing is
     * left out so the output is reproducible.
     */
    auto to_json(const SolveReport & report) -> json;

    auto to_json(const ClaimResult & result) -> json;
    auto to_json(const std::vector<ClaimResult> & results) -> json;

    /// Round table: "i | B^(i)" rows, round 0 being the initial set.
    auto write_trace_table(std::ostream & out, const Graph & g, const ForcingTrace & trace) -> void;

    auto write_report_table(std::ostream & out, const SolveReport & report) -> void;
    auto write_report_csv(std::ostream & out, const SolveReport & report) -> void;

    /// claim,instances,holds,violated,budget_exceeded per claim id.
    auto write_claims_csv(std::ostream & out, const std::vector<ClaimResult> & results) -> void;
    auto write_claims_table(std::ostream & out, const std::vector<ClaimResult> & results) -> void;
}

#endif
