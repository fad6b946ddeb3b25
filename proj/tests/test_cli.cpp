#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false)
{
    std::string cmd = std::string(WONDERFUL_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

const std::string m0n5 = std::string("--config ") + WONDERFUL_CONFIG_DIR + "/m0n5.json";

} // namespace

TEST_CASE("f-vector of the five-point configuration")
{
    auto r = run("nested " + m0n5 + " --fvector");
    CHECK(r.status == 0);
    CHECK(r.out == "1,10,15\n");
    auto csv = run("fvector " + m0n5 + " --format csv");
    CHECK(csv.out == "f0,f1,f2\n1,10,15\n");
}

TEST_CASE("interleaved order as JSON")
{
    auto r = run("order --scheme interleaved --n 2 --components 1");
    CHECK(r.status == 0);
    CHECK(r.out == "[\"D:c1:{1}\",\"D:c1:{1,2}\",\"D:c1:{2}\",\"Delta:{1,2}\"]\n");
}

TEST_CASE("fiber as DOT")
{
    auto r = run("fiber --nested '[D:c1:{1,2}]' --format dot");
    CHECK(r.status == 0);
    CHECK(r.out.find("Root {}") != std::string::npos);
    CHECK(r.out.find("D(c1,1) {1,2}") != std::string::npos);
    CHECK(r.out.find("v0 -> v1") != std::string::npos);
    auto j = run("fiber --nested '[\"D:c1:{1,2,3}\",\"Delta:{1,2}\"]' --format json");
    auto tree = nlohmann::json::parse(j.out);
    CHECK(tree["stable"] == true);
    CHECK(tree["vertices"].size() == 3);
}

TEST_CASE("listing commands")
{
    auto d = run("divisors --n 2 --components 1 --format json");
    CHECK(d.out == "[\"D:c1:{1}\",\"D:c1:{2}\",\"D:c1:{1,2}\",\"Delta:{1,2}\"]\n");
    auto f = run("facets " + m0n5 + " --format json");
    CHECK(nlohmann::json::parse(f.out).size() == 15);
    auto o = run("orbits --n 3 --space FM --format json");
    auto arr = nlohmann::json::parse(o.out);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["size"] == 3);
    auto check = run("nested --check '[D:c1:{1},Delta:{1,2}]'");
    CHECK(check.out == "not nested\n");
}

TEST_CASE("rewrite and certify")
{
    auto r = run("rewrite --n 3 --components 1 --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    auto c = run("certify " + m0n5);
    CHECK(c.status == 0);
    CHECK(c.out.find("FAIL") == std::string::npos);
    CHECK(c.out.find("PASS m0n-golden") != std::string::npos);
}

TEST_CASE("errors")
{
    auto bad = run("divisors --n 2 --components 1 --component-dim 1", true);
    CHECK(bad.status == 2);
    auto err = nlohmann::json::parse(bad.out);
    CHECK(err["error"] == "invalid-config");

    auto missing = run("divisors --config /nonexistent.json", true);
    CHECK(missing.status == 2);

    auto budget = run("nested --n 6 --components 3", true);
    CHECK(budget.status == 3);
    CHECK(nlohmann::json::parse(budget.out)["error"] == "budget-exceeded");

    CHECK(run("fiber --nested '[D:c1:{1},Delta:{1,2}]'").status == 2);
    CHECK(run("order --format dot --n 2").status == 2);
    CHECK(run("").status != 0);
}

TEST_CASE("outputs do not depend on the worker count")
{
    for (const std::string cmd : {"nested --n 3 --components 2 --format json", "facets --n 3 --components 2",
                                  "fvector --n 4 --space FM --format csv"}) {
        auto base = run(cmd + " --workers 1").out;
        CHECK_FALSE(base.empty());
        CHECK(run(cmd + " --workers 2").out == base);
        CHECK(run(cmd + " --workers 4").out == base);
    }
}
