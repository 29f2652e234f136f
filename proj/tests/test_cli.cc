#include <doctest.h>

#include "cli_runner.hh"

#include <json.hpp>

using json = nlohmann::json;

namespace
{
    const std::string zf_bin = ZF_CLI_PATH;

    auto zf(const std::string & args) { return cli::run(cli::quote(zf_bin) + " " + args + " 2>/dev/null"); }
    auto zf_err(const std::string & args) { return cli::run(cli::quote(zf_bin) + " " + args + " 2>&1 >/dev/null"); }
}

TEST_CASE("compute")
{
    auto r = zf("compute 'cycle(8)'");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["z"] == 2);
    CHECK(j["z_c"] == 2);
    CHECK(j["pt"] == 3);
    CHECK(j["n"] == 8);
    CHECK(j["m"] == 8);
    CHECK(r.out.find("\"z\":2,\"z_c\":2") != std::string::npos);
    CHECK(j["budget"]["exceeded"] == false);
    CHECK(j["counts"]["min_zfs"] == 8);
}

TEST_CASE("trace")
{
    auto r = zf("trace 'path(6)' --seed 0");
    CHECK(r.status == 0);
    auto j = json::parse(r.out);
    CHECK(j["pt"] == 5);
    CHECK(j["rounds"].size() == 5);
    CHECK(j["rounds"][0][0]["forcer"] == 0);
    CHECK(j["rounds"][0][0]["forced"] == 1);

    auto stalled = json::parse(zf("trace 'cycle(8)' --seed 0,3").out);
    CHECK(stalled["pt"].is_null());
    CHECK(stalled["note"] == "NotForcing");

    auto table = zf("trace 'supertriangle(4)' --seed 0,1,3,6 --format table");
    CHECK(table.status == 0);
    CHECK(table.out.find("{2,7}") != std::string::npos);
}

TEST_CASE("enumerate")
{
    auto r = zf("enumerate 'cycle(4)' --min-zfs --format table");
    CHECK(r.status == 0);
    CHECK(r.out == "{0,1}\n{0,3}\n{1,2}\n{2,3}\n");
    auto c = zf("enumerate 'pc(3)[chords:1@1,1@3]' --min-czfs --format table");
    CHECK(c.out == "{0,1}\n{0,5}\n{1,2}\n{2,3}\n");
    CHECK(zf("enumerate 'cycle(4)'").out == "[0,1]\n[0,3]\n[1,2]\n[2,3]\n");
}

TEST_CASE("inputs from stdin and files")
{
    auto r = cli::run("printf 'n 3\\n0 1\\n1 2\\n' | " + cli::quote(zf_bin) + " compute -");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out)["z"] == 1);

    auto edges = zf("families 'wheel(5)'");
    CHECK(edges.status == 0);
    CHECK(edges.out.rfind("n 5\n", 0) == 0);
    CHECK(zf("compute 'wheel(5)'").out == cli::run("printf '%s' " + cli::quote(edges.out) + " | "
                + cli::quote(zf_bin) + " compute -").out);
}

TEST_CASE("exit codes and structured errors")
{
    CHECK(zf("compute 'path('").status == 2);
    auto e = zf_err("compute 'path('");
    auto j = json::parse(e.out);
    CHECK(j["error"] == "ParseError");
    CHECK(j.contains("message"));

    CHECK(zf("trace 'path(3)' --seed 7").status == 2);
    CHECK(zf("compute 'corona(cycle(5),path(3))' --budget 20").status == 3);
    CHECK(json::parse(zf_err("compute 'corona(cycle(5),path(3))' --budget 20").out)["error"] == "BudgetExceeded");
    CHECK(zf("verify --suite named").status == 1);
    CHECK(zf("verify --suite exhaustive --nmax 4").status == 0);
    CHECK(zf("frobnicate").status == 2);
}

TEST_CASE("output formats")
{
    auto csv = zf("verify --suite exhaustive --nmax 3 --format csv");
    CHECK(csv.out.rfind("claim,instances,holds,violated,budget_exceeded\n", 0) == 0);
    auto table = zf("compute 'wheel(6)' --format table");
    CHECK(table.status == 0);
    CHECK(! table.out.empty());
    auto report_csv = zf("compute 'wheel(6)' --format csv");
    CHECK(report_csv.status == 0);
}

TEST_CASE("parallel runs print identical reports")
{
    auto a = zf("compute 'strong(cycle(4),path(3))' --jobs 1");
    auto b = zf("compute 'strong(cycle(4),path(3))' --jobs 6");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}
