#include <zf/dsl.hh>
#include <zf/families.hh>
#include <zf/forcing.hh>
#include <zf/report.hh>
#include <zf/solver.hh>
#include <zf/verify.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_violated = 1,
        exit_input = 2,
        exit_budget = 3
    };

    auto report_error(std::string_view kind, const std::string & message) -> void
    {
        std::cerr << zf::json{ { "error", std::string(kind) }, { "message", message } }.dump() << '\n';
    }

    /// "-" reads an edge list from stdin, an existing path an edge list file, anything else is a family term.
    auto load_graph(const std::string & source) -> zf::Graph
    {
        if (source == "-") {
            std::string text{ std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>() };
            return zf::parse_edge_list(text);
        }
        std::error_code ec;
        if (std::filesystem::is_regular_file(source, ec)) {
            std::ifstream in(source);
            std::string text{ std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>() };
            return zf::parse_edge_list(text);
        }
        return zf::parse_family_dsl(source);
    }

    auto parse_seed(const std::string & text, int n) -> zf::VertexSet
    {
        zf::VertexSet seed;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(item, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != item.size())
                throw zf::ParseError("bad seed vertex '" + item + "'", 0);
            if (v < 0 || v >= n)
                throw zf::Error(zf::ErrorKind::EndpointOutOfRange, "seed vertex " + item + " is not a vertex");
            seed.set(v);
        }
        return seed;
    }

    struct Output
    {
        std::string path;
        std::ofstream file;

        auto stream() -> std::ostream &
        {
            if (path.empty())
                return std::cout;
            if (! file.is_open()) {
                file.open(path);
                if (! file)
                    throw zf::Error(zf::ErrorKind::ParseError, "cannot open output file " + path);
            }
            return file;
        }
    };
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Exact zero forcing and connected zero forcing toolkit" };
    app.require_subcommand(1);

    std::string input, format = "json", seed_text, suite = "all", out_path;
    long long budget = zf::budget_from_environment();
    int jobs = 1, nmax = 6;
    bool connected = false, min_zfs = false, min_czfs = false;

    auto add_common = [&] (CLI::App * cmd) {
        cmd->add_option("--format", format, "json, csv or table")->check(CLI::IsMember({ "json", "csv", "table" }));
        cmd->add_option("--budget", budget, "maximum candidate evaluations (default $ZF_BUDGET or 1e8)")->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--out", out_path, "write the report here instead of stdout");
    };

    auto compute = app.add_subcommand("compute", "Z, Z_c and the propagation-time extrema with witnesses");
    compute->add_option("input", input, "family term, edge-list file, or - for stdin")->required();
    compute->add_flag("--connected", connected, "accepted for symmetry; compute always reports both variants");
    add_common(compute);

    auto trace = app.add_subcommand("trace", "round-by-round forcing from a seed set");
    trace->add_option("input", input, "family term, edge-list file, or - for stdin")->required();
    trace->add_option("--seed", seed_text, "comma-separated vertex ids")->required();
    add_common(trace);

    auto verify = app.add_subcommand("verify", "check the closed forms, bounds and characterizations");
    verify->add_option("--suite", suite, "named, products, exhaustive or all")
        ->check(CLI::IsMember({ "named", "products", "exhaustive", "all" }));
    verify->add_option("--nmax", nmax, "largest order for the exhaustive suite")->check(CLI::Range(1, 7));
    add_common(verify);

    auto enumerate = app.add_subcommand("enumerate", "list every minimum (connected) zero forcing set, one per line");
    enumerate->add_option("input", input, "family term, edge-list file, or - for stdin")->required();
    auto zfs_flag = enumerate->add_flag("--min-zfs", min_zfs, "minimum zero forcing sets (default)");
    enumerate->add_flag("--min-czfs,--connected", min_czfs, "minimum connected zero forcing sets")->excludes(zfs_flag);
    add_common(enumerate);

    auto families = app.add_subcommand("families", "print a family term as an edge list, or list the term grammar");
    families->add_option("input", input, "family term");
    add_common(families);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    zf::SolverOptions options;
    options.budget = budget;
    options.jobs = jobs;
    Output output{ out_path, {} };

    try {
        if (compute->parsed()) {
            auto g = load_graph(input);
            auto report = zf::solve_report(g, options);
            auto & out = output.stream();
            if (format == "json")
                out << zf::to_json(report).dump() << '\n';
            else if (format == "csv")
                zf::write_report_csv(out, report);
            else
                zf::write_report_table(out, report);
            if (report.stats.exceeded) {
                report_error("BudgetExceeded", "closure budget exhausted; report is partial");
                return exit_budget;
            }
            return exit_ok;
        }

        if (trace->parsed()) {
            auto g = load_graph(input);
            auto seed = parse_seed(seed_text, g.size());
            auto t = zf::propagation_trace(g, seed);
            auto & out = output.stream();
            if (format == "table")
                zf::write_trace_table(out, g, t);
            else {
                auto j = zf::to_json(t);
                if (! t.pt)
                    j["note"] = "NotForcing";
                out << j.dump() << '\n';
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            std::vector<zf::ClaimResult> results;
            auto append = [&] (std::vector<zf::ClaimResult> more) {
                results.insert(results.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
            };
            if (suite == "named" || suite == "all")
                append(zf::check_named_parameters({}, options));
            if (suite == "products" || suite == "all")
                append(zf::check_product_bounds({}, options));
            if (suite == "exhaustive" || suite == "all") {
                zf::ExhaustiveOptions ex;
                ex.n_max = nmax;
                ex.jobs = jobs;
                append(zf::exhaustive_small_graphs(ex));
            }
            zf::sort_results(results);

            auto & out = output.stream();
            if (format == "json")
                out << zf::to_json(results).dump(2) << '\n';
            else if (format == "csv")
                zf::write_claims_csv(out, results);
            else
                zf::write_claims_table(out, results);
            return zf::any_hard_violation(results) ? exit_violated : exit_ok;
        }

        if (enumerate->parsed()) {
            auto g = load_graph(input);
            zf::Solver solver(g, options);
            auto & out = output.stream();
            std::vector<zf::VertexSet> sets;
            if (min_czfs)
                sets = solver.enumerate_min_czfs(solver.connected_zero_forcing_number().value);
            else
                sets = solver.enumerate_min_zfs(solver.zero_forcing_number().value);
            for (auto & s : sets) {
                if (format == "json")
                    out << zf::to_json(s).dump() << '\n';
                else
                    out << zf::to_string(s) << '\n';
            }
            return exit_ok;
        }

        if (families->parsed()) {
            auto & out = output.stream();
            if (input.empty()) {
                out << "path(N) cycle(N) complete(N) star(N) wheel(N) supertriangle(N) empty(N)\n"
                    << "multipartite(N,N,...) cartesian(A,B) strong(A,B) corona(A,B) union(A,B)\n"
                    << "gencorona(A;B1,B2,...) vsum(A,v,B,w) pc(N,...)[chords:I@J,...]\n";
                return exit_ok;
            }
            zf::write_edge_list(out, zf::parse_family_dsl(input));
            return exit_ok;
        }
    }
    catch (const zf::BudgetExceeded & e) {
        report_error("BudgetExceeded", e.what());
        return exit_budget;
    }
    catch (const zf::Error & e) {
        report_error(zf::error_kind_name(e.kind()), e.what());
        return exit_input;
    }

    return exit_ok;
}
