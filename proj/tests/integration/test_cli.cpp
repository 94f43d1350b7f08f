// End-to-end checks of the hlb binary: flag handling, exit codes, and
// byte-for-byte reproducibility of its reports.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HLB_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("exponent: worked values and the identity line") {
    const RunResult r = run_cli("exponent --m 3 --p 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "s = 12/7"));
    CHECK(contains(r.output, "lambda_0 = 6/5"));
    CHECK(contains(r.output, "identity (m-1)/s + 1/lambda_0 = (m+1)/2: ok"));
    CHECK(contains(r.output, "conjugate chain"));

    const RunResult inf = run_cli("exponent --m 2 --p inf");
    CHECK(inf.exit_code == 0);
    CHECK(contains(inf.output, "s = 4/3"));
}

TEST_CASE("exponent: range errors exit with 2") {
    CHECK(run_cli("exponent --m 3 --p 5").exit_code == 2);
    CHECK(run_cli("exponent --m 1 --p 12").exit_code == 2);
    CHECK(run_cli("exponent --m 3").exit_code == 2);  // missing --p
}

TEST_CASE("bound: auto, forced formula, and mixed-exponent routing") {
    const RunResult coincide = run_cli("bound --m 3 --p 24 --field real");
    CHECK(coincide.exit_code == 0);
    CHECK(contains(coincide.output, "formula = yhb"));
    CHECK(contains(coincide.output, "1.94091291394799"));
    CHECK(contains(coincide.output, "coincides with yu10"));

    const RunResult yu9 = run_cli("bound --m 3 --p 12 --field real --formula yu9");
    CHECK(yu9.exit_code == 0);
    CHECK(contains(yu9.output, "1.97023650745511"));

    const RunResult routed =
        run_cli("bound --m 3 --p 100 --field real --q 300/197,300/197,300/197");
    CHECK(routed.exit_code == 0);
    CHECK(contains(routed.output, "formula = thm999"));

    CHECK(run_cli("bound --m 2 --p 4 --field real --formula yhb").exit_code == 2);
    CHECK(run_cli("bound --m 3 --p 12 --field real --q 2,2,2").exit_code == 2);
}

TEST_CASE("interpolate: weights and round trip") {
    const RunResult r = run_cli("interpolate --m 3 --p 12");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "theta_1 = 1/3"));
    CHECK(contains(r.output, "interpolated q = (6/5, 12/7, 12/7)"));
    CHECK(contains(r.output, "matches (lambda_0, s, ..., s): ok"));
    CHECK(contains(r.output, "solve_weights round trip: ok"));
}

TEST_CASE("verify: exact mode passes with zero violations") {
    const RunResult r =
        run_cli("verify --m 2 --n 5 --p inf --field real --trials 40 --seed 1 --exact");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "hard_violations=0"));
    CHECK(contains(r.output, "vertex_trials=40"));
}

TEST_CASE("verify: soft mode reports and exits cleanly") {
    const RunResult r =
        run_cli("verify --m 3 --n 3 --p 12 --field real --trials 5 --restarts 5 --seed 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "alternating"));
}

TEST_CASE("verify: usage and eligibility errors exit with 2") {
    CHECK(run_cli("verify --m 2 --n 5 --field real --trials 5").exit_code == 2);  // missing --p
    CHECK(run_cli("verify --m 2 --n 5 --p 4 --trials 5 --exact").exit_code == 2);
}

TEST_CASE("verify: custom mixed exponents with exact norms hold against the routed bound") {
    // (6/5, 12/7, 12/7) is the interpolated vector for (m, p) = (3, 12); at
    // p = inf it is admissible and its bound coincides with the interpolated
    // constant for p = 12.
    const RunResult r = run_cli(
        "verify --m 3 --n 3 --p inf --field real --trials 60 --seed 4 --q 6/5,12/7,12/7 --exact");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "# bound thm765 = 1.96041205752957"));
    CHECK(contains(r.output, "hard_violations=0"));
    CHECK(contains(r.output, "vertex_trials=60"));
}

TEST_CASE("verify: --out writes the report to a file") {
    const std::string path = "/tmp/hlb_cli_out_test.csv";
    std::remove(path.c_str());
    const RunResult r = run_cli("verify --m 2 --n 4 --p inf --field real --trials 5 --seed 8 --out " +
                                path);
    CHECK(r.exit_code == 0);
    CHECK_FALSE(contains(r.output, "trial,mixed_norm"));  // nothing on stdout
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(contains(contents, "trial,mixed_norm"));
    CHECK(contains(contents, "# summary trials=5"));
    std::remove(path.c_str());
}

TEST_CASE("figure: reproducible output and the m >= 3 guard") {
    const RunResult a = run_cli("figure --m-min 3 --m-max 4 --points 7");
    const RunResult b = run_cli("figure --m-min 3 --m-max 4 --points 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "m,p,sqrt2_exponent"));
    CHECK(contains(a.output, "3,6,2"));
    CHECK(contains(a.output, "3,24,0"));
    CHECK(run_cli("figure --m-min 2 --m-max 4 --points 7").exit_code == 2);
}

TEST_CASE("compare: m = 2 rows mark the interpolated bound n/a") {
    const RunResult r = run_cli("compare --m-min 2 --m-max 3 --points 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "m,p,yu9,yhb,best,winner"));
    CHECK(contains(r.output, ",na,"));
}

TEST_CASE("probe: runs and is deterministic") {
    const RunResult a = run_cli("probe --m 2 --p inf --n-min 1 --n-max 3 --trials 3 --seed 2");
    const RunResult b = run_cli("probe --m 2 --p inf --n-min 1 --n-max 3 --trials 3 --seed 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "n,r,mean_ratio,trials"));
}

TEST_CASE("verify output is independent of HLB_THREADS") {
    const std::string flags = "verify --m 2 --n 4 --p inf --field real --trials 24 --seed 9";
    const RunResult one = run_cli(flags + " --format json");
    RunResult three;
    {
        const std::string cmd = std::string("HLB_THREADS=3 ") + HLB_CLI_PATH + " " + flags +
                                " --format json 2>&1";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buf{};
        std::size_t got = 0;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
            three.output.append(buf.data(), got);
        three.exit_code = WEXITSTATUS(pclose(pipe));
    }
    CHECK(one.exit_code == 0);
    CHECK(three.exit_code == 0);
    CHECK(one.output == three.output);
}

TEST_CASE("json format mirrors the csv report") {
    const RunResult r =
        run_cli("verify --m 2 --n 4 --p inf --field real --trials 6 --seed 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"command\": \"verify\""));
    CHECK(contains(r.output, "\"hard_violations\": 0"));
}

TEST_CASE("version flag") {
    const RunResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "hlb "));
}
