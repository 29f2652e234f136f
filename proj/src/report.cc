#include <zf/report.hh>

#include <iomanip>
#include <map>
#include <ostream>

using namespace zf;

auto zf::to_json(const VertexSet & s) -> json
{
    return json(s.to_vector());
}

auto zf::to_json(const ForcingTrace & trace) -> json
{
    json rounds = json::array();
    for (auto & round : trace.rounds) {
        json r = json::array();
        for (auto & f : round)
            r.push_back(json{ { "forcer", f.forcer }, { "forced", f.forced } });
        rounds.push_back(std::move(r));
    }
    return json{
        { "initial", to_json(trace.initial) },
        { "rounds", std::move(rounds) },
        { "final", to_json(trace.final) },
        { "pt", trace.pt ? json(*trace.pt) : json(nullptr) } };
}

namespace
{
    auto value_or_null(const std::optional<Witnessed> & w) -> json
    {
        return w ? json(w->value) : json(nullptr);
    }

    auto witness_or_null(const std::optional<Witnessed> & w) -> json
    {
        return w ? to_json(w->witness) : json(nullptr);
    }

    template <typename T_>
    auto opt(const std::optional<T_> & v) -> json
    {
        return v ? json(*v) : json(nullptr);
    }

    auto cell(const std::optional<Witnessed> & w) -> std::string
    {
        return w ? std::to_string(w->value) : "-";
    }
}

auto zf::to_json(const SolveReport & r) -> json
{
    return json{
        { "n", r.n },
        { "m", r.m },
        { "z", value_or_null(r.z) },
        { "z_c", value_or_null(r.z_c) },
        { "pt", value_or_null(r.pt) },
        { "PT", value_or_null(r.PT) },
        { "pt_c", value_or_null(r.pt_c) },
        { "PT_c", value_or_null(r.PT_c) },
        { "witnesses", json{
            { "z", witness_or_null(r.z) },
            { "z_c", witness_or_null(r.z_c) },
            { "pt", witness_or_null(r.pt) },
            { "PT", witness_or_null(r.PT) },
            { "pt_c", witness_or_null(r.pt_c) },
            { "PT_c", witness_or_null(r.PT_c) } } },
        { "counts", json{ { "min_zfs", opt(r.min_zfs_count) }, { "min_czfs", opt(r.min_czfs_count) } } },
        { "budget", json{ { "closures", r.stats.closures }, { "exceeded", r.stats.exceeded } } } };
}

auto zf::to_json(const ClaimResult & r) -> json
{
    json examples = json::array();
    for (auto & ce : r.counterexamples) {
        json edges = json::array();
        for (auto [u, v] : ce.edges)
            edges.push_back(json::array({ u, v }));
        examples.push_back(json{
            { "instance", ce.instance },
            { "n", ce.n },
            { "edges", std::move(edges) },
            { "computed", json(ce.computed) },
            { "detail", ce.detail } });
    }

    return json{
        { "claim", r.claim },
        { "instance", r.instance },
        { "relation", std::string(relation_symbol(r.relation)) },
        { "hard", r.hard },
        { "expected", json(r.expected) },
        { "computed", json(r.computed) },
        { "verdict", std::string(verdict_name(r.verdict)) },
        { "violations", r.violations },
        { "counterexamples", std::move(examples) } };
}

auto zf::to_json(const std::vector<ClaimResult> & results) -> json
{
    json out = json::array();
    for (auto & r : results)
        out.push_back(to_json(r));
    return out;
}

auto zf::write_trace_table(std::ostream & out, const Graph & g, const ForcingTrace & trace) -> void
{
    auto names = [&] (const VertexSet & s) {
        std::string result = "{";
        bool first = true;
        for (int v : s) {
            result += (first ? "" : ",") + g.label(v);
            first = false;
        }
        return result + "}";
    };

    out << std::setw(4) << "i" << " | B^(i)\n";
    out << std::setw(4) << 0 << " | " << names(trace.initial) << '\n';
    for (std::size_t r = 0 ; r < trace.rounds.size() ; ++r) {
        out << std::setw(4) << r + 1 << " | " << names(trace.round_set(r)) << "   ";
        for (auto & f : trace.rounds[r])
            out << ' ' << g.label(f.forcer) << "->" << g.label(f.forced);
        out << '\n';
    }
    if (trace.pt)
        out << "pt = " << *trace.pt << '\n';
    else
        out << "not forcing: derived coloring " << names(trace.final) << " misses "
            << g.size() - trace.final.count() << " vertices\n";
}

auto zf::write_report_table(std::ostream & out, const SolveReport & r) -> void
{
    auto row = [&] (const char * name, const std::optional<Witnessed> & w) {
        out << std::left << std::setw(6) << name << std::right << std::setw(6) << cell(w);
        if (w)
            out << "   " << to_string(w->witness);
        out << '\n';
    };
    out << "n = " << r.n << ", m = " << r.m << '\n';
    row("Z", r.z);
    row("Z_c", r.z_c);
    row("pt", r.pt);
    row("PT", r.PT);
    row("pt_c", r.pt_c);
    row("PT_c", r.PT_c);
    out << "minimum ZFS: " << (r.min_zfs_count ? std::to_string(*r.min_zfs_count) : "-")
        << ", minimum CZFS: " << (r.min_czfs_count ? std::to_string(*r.min_czfs_count) : "-") << '\n';
    out << "closures: " << r.stats.closures << (r.stats.exceeded ? " (budget exceeded)" : "") << '\n';
}

auto zf::write_report_csv(std::ostream & out, const SolveReport & r) -> void
{
    out << "n,m,z,z_c,pt,PT,pt_c,PT_c,min_zfs,min_czfs,closures,exceeded\n";
    auto c = [] (const std::optional<Witnessed> & w) { return w ? std::to_string(w->value) : std::string(); };
    auto k = [] (const std::optional<long long> & v) { return v ? std::to_string(*v) : std::string(); };
    out << r.n << ',' << r.m << ',' << c(r.z) << ',' << c(r.z_c) << ',' << c(r.pt) << ',' << c(r.PT) << ','
        << c(r.pt_c) << ',' << c(r.PT_c) << ',' << k(r.min_zfs_count) << ',' << k(r.min_czfs_count) << ','
        << r.stats.closures << ',' << (r.stats.exceeded ? "true" : "false") << '\n';
}

namespace
{
    struct Summary
    {
        long long instances = 0, holds = 0, violated = 0, exceeded = 0;
        bool hard = true;
    };

    auto summarise(const std::vector<ClaimResult> & results) -> std::map<std::string, Summary>
    {
        std::map<std::string, Summary> out;
        for (auto & r : results) {
            auto & s = out[r.claim];
            s.hard = r.hard;
            ++s.instances;
            switch (r.verdict) {
                case Verdict::Holds:          ++s.holds; break;
                case Verdict::Violated:       ++s.violated; break;
                case Verdict::BudgetExceeded: ++s.exceeded; break;
            }
        }
        return out;
    }
}

auto zf::write_claims_csv(std::ostream & out, const std::vector<ClaimResult> & results) -> void
{
    out << "claim,instances,holds,violated,budget_exceeded\n";
    for (auto & [claim, s] : summarise(results))
        out << claim << ',' << s.instances << ',' << s.holds << ',' << s.violated << ',' << s.exceeded << '\n';
}

auto zf::write_claims_table(std::ostream & out, const std::vector<ClaimResult> & results) -> void
{
    for (auto & r : results) {
        out << std::left << std::setw(30) << r.claim << std::setw(48) << r.instance << std::right
            << std::setw(16) << verdict_name(r.verdict) << (r.hard ? "" : "  (as stated)");
        if (r.relation == Relation::Property)
            out << "  " << r.computed.at("checked") << " checked, " << r.violations << " violations";
        else
            for (auto & [k, v] : r.computed) {
                out << "  " << k << "=" << v;
                if (auto e = r.expected.find(k) ; e != r.expected.end())
                    out << (r.relation == Relation::AtMost ? "<=" : "/") << e->second;
            }
        out << '\n';
    }
}
