#include <zf/dsl.hh>
#include <zf/verify.hh>

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

using namespace zf;

auto zf::verdict_name(Verdict v) -> std::string_view
{
    switch (v) {
        case Verdict::Holds:          return "holds";
        case Verdict::Violated:       return "violated";
        case Verdict::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

auto zf::relation_symbol(Relation r) -> std::string_view
{
    switch (r) {
        case Relation::Equal:     return "=";
        case Relation::AtMost:    return "<=";
        case Relation::ZEqualsZc: return "z=z_c";
        case Relation::Property:  return "property";
    }
    return "?";
}

namespace
{
    // Solver-backed values for the keys a claim mentions.
    auto measure(const Graph & g, const std::vector<std::string> & keys, SolverOptions options) -> Values
    {
        Solver solver(g, options);
        Values result;
        for (auto & key : keys) {
            if (key == "z")
                result[key] = solver.zero_forcing_number().value;
            else if (key == "z_c")
                result[key] = solver.connected_zero_forcing_number().value;
            else if (key == "pt")
                result[key] = solver.propagation_extrema(false).min.value;
            else if (key == "PT")
                result[key] = solver.propagation_extrema(false).max.value;
            else if (key == "pt_c")
                result[key] = solver.propagation_extrema(true).min.value;
            else if (key == "PT_c")
                result[key] = solver.propagation_extrema(true).max.value;
            else
                throw Error(ErrorKind::InvalidSpec, "unknown measured quantity '" + key + "'");
        }
        return result;
    }

    auto keys_for(Relation relation, const Values & expected) -> std::vector<std::string>
    {
        if (relation == Relation::ZEqualsZc)
            return { "z", "z_c" };
        std::vector<std::string> keys;
        for (auto & [k, v] : expected)
            keys.push_back(k);
        return keys;
    }

    auto relation_holds(Relation relation, const Values & expected, const Values & computed) -> bool
    {
        switch (relation) {
            case Relation::Equal:
                for (auto & [k, v] : expected)
                    if (computed.at(k) != v)
                        return false;
                return true;
            case Relation::AtMost:
                for (auto & [k, v] : expected)
                    if (computed.at(k) > v)
                        return false;
                return true;
            case Relation::ZEqualsZc:
                return computed.at("z") == computed.at("z_c");
            case Relation::Property:
                break;
        }
        throw Error(ErrorKind::InvalidSpec, "property claims are evaluated per graph");
    }

    auto evaluate(const std::string & claim, const std::string & instance, const Graph & g, Relation relation,
            bool hard, Values expected, SolverOptions options) -> ClaimResult
    {
        ClaimResult result;
        result.claim = claim;
        result.instance = instance;
        result.relation = relation;
        result.hard = hard;
        result.expected = std::move(expected);
        try {
            result.computed = measure(g, keys_for(relation, result.expected), options);
            if (! relation_holds(relation, result.expected, result.computed)) {
                result.verdict = Verdict::Violated;
                result.violations = 1;
                result.counterexamples.push_back(Counterexample{ instance, g.size(), g.edges(), result.computed,
                        "computed values do not satisfy " + std::string(relation_symbol(relation)) });
            }
        }
        catch (const BudgetExceeded &) {
            result.verdict = Verdict::BudgetExceeded;
        }
        return result;
    }

    auto evaluate_dsl(const std::string & claim, const std::string & instance, Relation relation, bool hard,
            Values expected, SolverOptions options) -> ClaimResult
    {
        return evaluate(claim, instance, parse_family_dsl(instance), relation, hard, std::move(expected), options);
    }

    auto call(const std::string & name, const std::vector<std::string> & args) -> std::string
    {
        std::string result = name + "(";
        for (std::size_t i = 0 ; i < args.size() ; ++i)
            result += (i ? "," : "") + args[i];
        return result + ")";
    }

    auto num(int v) -> std::string
    {
        return std::to_string(v);
    }

    // All partitions of total into at least two parts, parts nonincreasing.
    auto partitions(int total) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        std::vector<int> current;
        auto rec = [&] (auto & self, int left, int max_part) -> void {
            if (left == 0) {
                if (current.size() >= 2)
                    result.push_back(current);
                return;
            }
            for (int p = std::min(left, max_part) ; p >= 1 ; --p) {
                current.push_back(p);
                self(self, left - p, p);
                current.pop_back();
            }
        };
        rec(rec, total, total);
        return result;
    }
}

auto zf::check_named_parameters(const NamedRanges & r, SolverOptions options) -> std::vector<ClaimResult>
{
    std::vector<ClaimResult> results;
    auto add = [&] (const std::string & claim, const std::string & inst, long long z, long long zc) {
        results.push_back(evaluate_dsl(claim, inst, Relation::Equal, true, Values{ { "z", z }, { "z_c", zc } }, options));
    };

    for (int n = r.complete_lo ; n <= r.complete_hi ; ++n)
        add("named/complete", call("complete", { num(n) }), n - 1, n - 1);
    for (int n = r.path_lo ; n <= r.path_hi ; ++n)
        add("named/path", call("path", { num(n) }), 1, 1);
    for (int n = r.cycle_lo ; n <= r.cycle_hi ; ++n)
        add("named/cycle", call("cycle", { num(n) }), 2, 2);
    for (int n = r.wheel_lo ; n <= r.wheel_hi ; ++n)
        add("named/wheel", call("wheel", { num(n) }), 3, 3);
    for (int n = r.supertriangle_lo ; n <= r.supertriangle_hi ; ++n)
        add("named/supertriangle", call("supertriangle", { num(n) }), n, n);
    for (int n = r.star_lo ; n <= r.star_hi ; ++n)
        add("named/star", call("star", { num(n) }), n - 2, n - 1);

    for (int total = 2 ; total <= r.multipartite_max_total ; ++total)
        for (auto & parts : partitions(total)) {
            std::vector<std::string> args;
            for (int p : parts)
                args.push_back(num(p));
            add("multipartite", call("multipartite", args), total - 2, total - 2);
        }

    sort_results(results);
    return results;
}

auto zf::check_product_bounds(const ProductParams & p, SolverOptions options) -> std::vector<ClaimResult>
{
    std::vector<ClaimResult> results;
    auto z_of = [&] (const Graph & g) { return Solver(g, options).zero_forcing_number().value; };
    auto zc_of = [&] (const Graph & g) { return Solver(g, options).connected_zero_forcing_number().value; };

    auto guarded = [&] (const std::string & claim, const std::string & inst, bool hard, auto && body) {
        try {
            body();
        }
        catch (const BudgetExceeded &) {
            ClaimResult r;
            r.claim = claim;
            r.instance = inst;
            r.hard = hard;
            r.verdict = Verdict::BudgetExceeded;
            results.push_back(r);
        }
    };

    for (int n : p.strong_cycle_n)
        for (int m : p.strong_cycle_m) {
            auto inst = call("strong", { call("cycle", { num(n) }), call("path", { num(m) }) });
            long long bound = n + 2 * m - 2;
            results.push_back(evaluate_dsl("strong-cycle-path/bound", inst, Relation::AtMost, true,
                        Values{ { "z", bound }, { "z_c", bound } }, options));
        }

    for (int n = 1 ; n <= p.strong_path_max ; ++n)
        for (int m = 1 ; m <= p.strong_path_max ; ++m) {
            auto inst = call("strong", { call("path", { num(n) }), call("path", { num(m) }) });
            long long bound = n + m - 1;
            results.push_back(evaluate_dsl("strong-path-path/bound", inst, Relation::AtMost, true,
                        Values{ { "z", bound }, { "z_c", bound } }, options));
            results.push_back(evaluate_dsl("strong-path-path/equality", inst, Relation::ZEqualsZc, true, {}, options));
        }

    for (auto & base : p.cartesian_bases)
        for (int t : p.cartesian_t) {
            auto inst = call("cartesian", { base, call("path", { num(t) }) });
            long long order = parse_family_dsl(base).size();
            results.push_back(evaluate_dsl("cartesian-path/equality", inst, Relation::Equal, false,
                        Values{ { "z", order }, { "z_c", order } }, options));
        }

    for (auto & [a, b] : p.cartesian_pairs) {
        auto inst = call("cartesian", { a, b });
        guarded("cartesian/connected-bound", inst, true, [&] {
            auto g = parse_family_dsl(a), h = parse_family_dsl(b);
            long long bound = std::min(static_cast<long long>(zc_of(g)) * h.size(), static_cast<long long>(zc_of(h)) * g.size());
            results.push_back(evaluate_dsl("cartesian/connected-bound", inst, Relation::AtMost, true,
                        Values{ { "z_c", bound } }, options));
        });
    }

    for (auto & [base, attached] : p.gencorona_instances) {
        std::string inst = "gencorona(" + base + ";";
        for (std::size_t i = 0 ; i < attached.size() ; ++i)
            inst += (i ? "," : "") + attached[i];
        inst += ")";

        guarded("gencorona/bound", inst, true, [&] {
            auto g = parse_family_dsl(base);
            long long bound = g.size();
            bool equality_case = true;
            for (auto & a : attached) {
                auto h = parse_family_dsl(a);
                bound += z_of(h);
                if (h.size() <= 1 || ! is_connected(h))
                    equality_case = false;
            }
            if (! is_connected(g))
                return;
            results.push_back(evaluate_dsl("gencorona/bound", inst, Relation::AtMost, true, Values{ { "z_c", bound } }, options));
            if (equality_case)
                results.push_back(evaluate_dsl("gencorona/equality", inst, Relation::Equal, true, Values{ { "z_c", bound } }, options));
        });
    }

    for (auto & [a, b] : p.corona_pairs) {
        auto inst = call("corona", { a, b });
        guarded("corona/bound", inst, true, [&] {
            auto g = parse_family_dsl(a), h = parse_family_dsl(b);
            long long per_copy = static_cast<long long>(g.size()) * z_of(h);
            results.push_back(evaluate_dsl("corona/bound", inst, Relation::AtMost, true,
                        Values{ { "z", z_of(g) + per_copy } }, options));
            results.push_back(evaluate_dsl("corona/connected-bound", inst, Relation::AtMost, false,
                        Values{ { "z_c", zc_of(g) + per_copy } }, options));
        });
    }

    for (int n : p.corona_cycle_n)
        for (int m : p.corona_cycle_m)
            results.push_back(evaluate_dsl("corona-cycle-path/values",
                        call("corona", { call("cycle", { num(n) }), call("path", { num(m) }) }), Relation::Equal, true,
                        Values{ { "z", n + 2 }, { "z_c", 2 * n } }, options));

    for (int n : p.corona_path_n)
        for (int m : p.corona_path_m)
            results.push_back(evaluate_dsl("corona-path-cycle/values",
                        call("corona", { call("path", { num(n) }), call("cycle", { num(m) }) }), Relation::Equal, true,
                        Values{ { "z", 2 * n + 1 }, { "z_c", 3 * n } }, options));

    sort_results(results);
    return results;
}

namespace
{
    const std::vector<std::string> exhaustive_ids{
        "z-le-zc",
        "path-characterization",
        "max-connected-time",
        "min-connected-time",
        "max-connected-time/extended" };

    auto hard_exhaustive(const std::string & claim) -> bool
    {
        return claim == "z-le-zc" || claim == "path-characterization";
    }

    // Everything the small-graph predicates look at, computed on demand.
    class Facts
    {
        public:
            explicit Facts(const Graph & g) : _g(g), _connected(is_connected(g))
            {
                // small graphs only: an unbounded budget is safe
                SolverOptions options;
                options.budget = std::numeric_limits<long long>::max();
                Solver solver(g, options);
                auto plain = solver.propagation_extrema(false);
                auto conn = solver.propagation_extrema(true);
                z = plain.set_size;
                z_c = conn.set_size;
                pt_c = conn.min.value;
                PT_c = conn.max.value;
            }

            auto connected() const -> bool { return _connected; }

            auto form(bool strict, bool min_time) -> const ExtremalForm &
            {
                auto & slot = _forms[(strict ? 2 : 0) + (min_time ? 1 : 0)];
                if (! slot) {
                    RecognizerOptions options;
                    options.strict = strict;
                    options.minimum_time_chords = min_time;
                    slot = recognize_extremal_form(_g, options);
                }
                return *slot;
            }

            auto values() const -> Values
            {
                return Values{ { "z", z }, { "z_c", z_c }, { "pt_c", pt_c }, { "PT_c", PT_c },
                    { "connected", _connected }, { "n", _g.size() } };
            }

            int z, z_c, pt_c, PT_c;

        private:
            const Graph & _g;
            bool _connected;
            std::optional<ExtremalForm> _forms[4];
    };

    auto describe_form(const ExtremalForm & f) -> std::string
    {
        std::string result(extremal_kind_name(f.kind));
        if (f.spec)
            result += " " + describe(*f.spec);
        return result;
    }

    auto check_with(const std::string & claim, const Graph & g, Facts & facts) -> std::optional<Counterexample>
    {
        int n = g.size();
        auto fail = [&] (const std::string & detail) {
            return std::optional<Counterexample>(Counterexample{ "", n, g.edges(), facts.values(), detail });
        };

        if (claim == "z-le-zc") {
            if (facts.z > facts.z_c)
                return fail("Z > Z_c");
            return std::nullopt;
        }

        if (claim == "path-characterization") {
            if (! facts.connected())
                return std::nullopt;
            bool a = facts.z_c == 1, b = facts.pt_c == n - 1, c = facts.PT_c == n - 1, d = is_path_graph(g);
            if (a == b && b == c && c == d)
                return std::nullopt;
            return fail("Z_c=1:" + std::to_string(a) + " pt_c=n-1:" + std::to_string(b) + " PT_c=n-1:"
                    + std::to_string(c) + " path:" + std::to_string(d));
        }

        if (claim == "max-connected-time" || claim == "max-connected-time/extended") {
            bool extremal = facts.PT_c == n - 2;
            auto & form = facts.form(claim == "max-connected-time", false);
            if (extremal == form.accepted())
                return std::nullopt;
            if (extremal)
                return fail("PT_c = n-2 but no extremal form matches");
            return fail("recognized as " + describe_form(form) + " but PT_c = " + std::to_string(facts.PT_c));
        }

        if (claim == "min-connected-time") {
            if (! facts.connected())
                return std::nullopt;
            bool extremal = facts.pt_c == n - 2;
            auto & form = facts.form(true, true);
            if (extremal == form.accepted())
                return std::nullopt;
            if (extremal)
                return fail("pt_c = n-2 but no extremal form with the chord conditions matches");
            return fail("recognized as " + describe_form(form) + " but pt_c = " + std::to_string(facts.pt_c));
        }

        throw Error(ErrorKind::InvalidSpec, "unknown exhaustive claim '" + claim + "'");
    }

    auto applies(const std::string & claim, const Facts & facts) -> bool
    {
        if (claim == "path-characterization" || claim == "min-connected-time")
            return facts.connected();
        return true;
    }

    auto graph_from_mask(int n, unsigned long long mask) -> Graph
    {
        std::vector<Edge> edges;
        int bit = 0;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v, ++bit)
                if ((mask >> bit) & 1u)
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    struct Tally
    {
        long long checked = 0;
        long long violations = 0;
        std::vector<Counterexample> examples;
    };
}

auto zf::exhaustive_claim_ids() -> std::vector<std::string>
{
    return exhaustive_ids;
}

auto zf::check_small_graph(const std::string & claim, const Graph & g) -> std::optional<Counterexample>
{
    Facts facts(g);
    if (! applies(claim, facts))
        return std::nullopt;
    auto ce = check_with(claim, g, facts);
    if (ce)
        ce->instance = to_edge_list(g);
    return ce;
}

auto zf::exhaustive_small_graphs(const ExhaustiveOptions & options) -> std::vector<ClaimResult>
{
    auto claims = options.claims.empty() ? exhaustive_ids : options.claims;
    for (auto & c : claims)
        if (std::find(exhaustive_ids.begin(), exhaustive_ids.end(), c) == exhaustive_ids.end())
            throw Error(ErrorKind::InvalidSpec, "unknown exhaustive claim '" + c + "'");

    std::vector<ClaimResult> results;
    for (int n = 1 ; n <= options.n_max ; ++n) {
        int pairs = n * (n - 1) / 2;
        unsigned long long count = 1ULL << pairs;

        // contiguous mask blocks per worker, merged in block order
        int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(std::max<unsigned long long>(1, count / 256))));
        std::vector<std::vector<Tally>> tallies(jobs, std::vector<Tally>(claims.size()));
        auto work = [&] (int j) {
            unsigned long long lo = count * j / jobs, hi = count * (j + 1) / jobs;
            for (unsigned long long mask = lo ; mask < hi ; ++mask) {
                auto g = graph_from_mask(n, mask);
                Facts facts(g);
                for (std::size_t c = 0 ; c < claims.size() ; ++c) {
                    if (! applies(claims[c], facts))
                        continue;
                    auto & t = tallies[j][c];
                    ++t.checked;
                    if (auto ce = check_with(claims[c], g, facts)) {
                        ++t.violations;
                        if (t.examples.size() < options.max_counterexamples) {
                            ce->instance = "n=" + std::to_string(n) + " mask=" + std::to_string(mask);
                            t.examples.push_back(std::move(*ce));
                        }
                    }
                }
            }
        };

        if (jobs == 1)
            work(0);
        else {
            std::vector<std::thread> threads;
            for (int j = 0 ; j < jobs ; ++j)
                threads.emplace_back(work, j);
            for (auto & t : threads)
                t.join();
        }

        for (std::size_t c = 0 ; c < claims.size() ; ++c) {
            ClaimResult r;
            r.claim = claims[c];
            r.instance = "all-labeled(n=" + std::to_string(n) + ")";
            r.relation = Relation::Property;
            r.hard = hard_exhaustive(claims[c]);
            long long checked = 0;
            for (int j = 0 ; j < jobs ; ++j) {
                auto & t = tallies[j][c];
                checked += t.checked;
                r.violations += t.violations;
                for (auto & e : t.examples)
                    if (r.counterexamples.size() < options.max_counterexamples)
                        r.counterexamples.push_back(e);
            }
            r.computed = Values{ { "graphs", static_cast<long long>(count) }, { "checked", checked },
                { "violations", r.violations } };
            r.verdict = r.violations ? Verdict::Violated : Verdict::Holds;
            results.push_back(std::move(r));
        }
    }

    sort_results(results);
    return results;
}

auto zf::replay(const ClaimResult & claim, const Counterexample & ce, SolverOptions options) -> bool
{
    Graph g(ce.n, ce.edges);
    if (claim.relation == Relation::Property)
        return check_small_graph(claim.claim, g).has_value();
    auto computed = measure(g, keys_for(claim.relation, claim.expected), options);
    return ! relation_holds(claim.relation, claim.expected, computed);
}

auto zf::sort_results(std::vector<ClaimResult> & results) -> void
{
    std::stable_sort(results.begin(), results.end(), [] (const ClaimResult & a, const ClaimResult & b) {
            return a.claim != b.claim ? a.claim < b.claim : a.instance < b.instance; });
}

auto zf::any_hard_violation(const std::vector<ClaimResult> & results) -> bool
{
    return std::any_of(results.begin(), results.end(), [] (const ClaimResult & r) {
            return r.hard && r.verdict == Verdict::Violated; });
}
