#include "jmwg/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace jmwg;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("avg subcommand") {
    CliRun r = run({"avg", "--alpha", "2", "--mu", "1", "--F", "h[3]", "--poly"});
    CHECK(r.code == 0);
    CHECK(r.out == "-7 + 3*n + 1*n^2\n");

    r = run({"avg", "--alpha", "2", "--mu", "1", "--F", "h[3]", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "21\n");

    r = run({"avg", "--alpha", "2", "--mu", "1", "--F", "h[3]"});
    CHECK(r.code == 2);
}

TEST_CASE("wg series subcommand matches the printed expansion") {
    CliRun r = run({"wg", "series", "--n", "2", "--coset", "0", "--order", "6"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "N^-2\t1\nN^-3\t0\nN^-4\t2\nN^-5\t-2\nN^-6\t6\nN^-7\t-10\nN^-8\t22\n");
    // byte stability
    CliRun again = run({"wg", "series", "--n", "2", "--coset", "0", "--order", "6"});
    CHECK(again.out == r.out);
}

TEST_CASE("wg exact and integrate subcommands") {
    CliRun r = run({"wg", "exact", "--n", "2", "--N", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "(0)\t3/70\n1\t-1/140\n");

    r = run({"wg", "integrate", "--i", "1,1,2,2", "--j", "1,1,2,2", "--N", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "4/189\n");

    r = run({"wg", "integrate", "--i", "1,1,2", "--j", "1,1,2", "--N", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    CHECK(r.err.find("odd") != std::string::npos);

    r = run({"wg", "integrate", "--i", "1,9", "--j", "1,1", "--N", "4"});
    CHECK(r.code == 2);
}

TEST_CASE("wg mc subcommand") {
    CliRun r = run({"wg", "mc", "--i", "1,1", "--j", "1,1", "--N", "4", "--samples", "2000",
                    "--seed", "11"});
    CHECK(r.code == 0);
    CHECK(r.out.find("mean\t") != std::string::npos);
    CHECK(r.out.find("exact\t1/4") != std::string::npos);
}

TEST_CASE("expand subcommand") {
    CliRun coset = run({"expand", "--F", "h[3]", "--n", "3"});
    CHECK(coset.code == 0);
    CHECK(coset.out == "(0)\t6\n1\t11\n2\t6\n");

    CliRun cls = run({"expand", "--F", "h[2]", "--n", "4", "--jm", "all", "--exhaustive"});
    CHECK(cls.code == 0);
    CHECK(cls.out == "(0)\t6\n2\t2\n1,1\t1\n");
}

TEST_CASE("jack subcommands") {
    CliRun r = run({"jack", "theta", "--n", "2", "--alpha", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "lambda\\rho\t2\t1,1\n2\t2\t1\n1,1\t-1\t1\n");

    r = run({"jack", "measure", "--n", "3", "--alpha", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\t1/15\n2,1\t3/5\n1,1,1\t1/3\n");
}

TEST_CASE("json output") {
    CliRun r = run({"--json", "avg", "--alpha", "1/2", "--mu", "0", "--F", "e[2]", "--n", "4"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "avg");
    CHECK(j["value"] == "0");

    r = run({"--json", "wg", "exact", "--n", "1", "--N", "3"});
    auto j2 = nlohmann::json::parse(r.out);
    CHECK(j2["rows"][0]["key"] == "(0)");
    CHECK(j2["rows"][0]["value"] == "1/3");
}

TEST_CASE("usage errors") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"avg", "--alpha", "2", "--mu", "1"}).code == 2);          // missing --F
    CHECK(run({"avg", "--F", "q[1]", "--n", "2"}).code == 2);            // bad expression
    CHECK(run({"verify", "no-such-suite"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify subcommand runs a suite") {
    CliRun r = run({"verify", "props-4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ok   props-4/") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    CliRun c = run({"verify", "conjectures", "--max-k", "2"});
    CHECK(c.code == 0);
    CHECK(c.out.find("G^1_(0) = 0") != std::string::npos);
    CHECK(c.out.find("G^3_(2) = 6") != std::string::npos);
}
