#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>

#include "sbp/exact_num.hpp"

// End-to-end runs of the installed binary; SBP_CLI_PATH is injected by the
// build.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string command = std::string(SBP_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("prob: three methods agree on the k=0 query") {
    RunResult r = run("prob --m 3 --n 2 --k 0 --method all");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("formula: 0.33333333333333333333") != std::string::npos);
    CHECK(r.out.find("dp: 0.33333333333333333333") != std::string::npos);
    CHECK(r.out.find("stirling: 0.33333333333333333333") != std::string::npos);
    CHECK(r.out.find("MATCH") != std::string::npos);
}

TEST_CASE("prob: classic-birthday complement to twenty digits") {
    RunResult r = run("prob --m 365 --n 23 --k 23 --method formula");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0.49270276567601459277") != std::string::npos);
}

TEST_CASE("prob: two people cannot triple-share") {
    RunResult r = run("prob --m 7 --n 2 --r 3 --method stirling");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("stirling: 0.0000") != std::string::npos);
}

TEST_CASE("prob: k with the stirling method is a usage error") {
    CHECK(run("prob --m 3 --n 2 --k 1 --method stirling").exit_code == 2);
    CHECK(run("prob --m 3 --n 2 --k 0 --r 2").exit_code == 2);
    CHECK(run("prob --m 3 --n 2 --method all").exit_code == 2);
    CHECK(run("prob --m 3 --n 2 --r 1").exit_code == 2);
    CHECK(run("prob --m 3 --n 2 --k 0 --mode scaled --method all").exit_code == 2);
}

TEST_CASE("prob: dp layers stream as csv when asked") {
    RunResult r = run("prob --m 3 --n 2 --k 0 --method dp --emit-layers");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0,1\n") != std::string::npos);
    CHECK(r.out.find("1,3\n") != std::string::npos);
    CHECK(r.out.find("2,9\n") != std::string::npos);
}

TEST_CASE("prob: json output parses and matches the text value") {
    RunResult r = run("prob --m 5 --n 4 --r 2 --method all --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["match"] == true);
    CHECK(j["methods"]["formula"]["exact"] == "13/125");
    std::string decimal = j["methods"]["formula"]["decimal"].get<std::string>();
    CHECK(sbp::to_fixed_decimal_string(sbp::parse_rational("13/125"), 20) == decimal);
}

TEST_CASE("min-n: one day means two people") {
    RunResult r = run("min-n --m 1 --p 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n_min: 2") != std::string::npos);
}

TEST_CASE("min-n: year-scale crossings match the reference table") {
    RunResult half = run("min-n --m 365 --p 0.5");
    CHECK(half.exit_code == 0);
    CHECK(half.out.find("n_min: 3064") != std::string::npos);
    RunResult strict = run("min-n --m 366 --p 0.999");
    CHECK(strict.exit_code == 0);
    CHECK(strict.out.find("n_min: 5686") != std::string::npos);
}

TEST_CASE("min-n: rejects unreachable thresholds at parse") {
    CHECK(run("min-n --m 10 --p 1").exit_code == 2);
    CHECK(run("min-n --m 10 --p 1.5").exit_code == 2);
    CHECK(run("min-n --m 10 --p 0").exit_code == 2);
}

TEST_CASE("min-n: scan cap aborts with the resource exit code") {
    CHECK(run("min-n --m 10 --p 0.999 --scan-cap 20").exit_code == 3);
}

TEST_CASE("min-n: json carries the certified bracket and round-trips") {
    RunResult r = run("min-n --m 10 --p 1/2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n_min"] == 41);
    CHECK(j["certification"] == "exact");
    sbp::ExactRational at = sbp::parse_rational(j["prob_at"]["exact"].get<std::string>());
    CHECK(sbp::to_fixed_decimal_string(at, 20) == j["prob_at"]["decimal"].get<std::string>());
    CHECK(sbp::to_fixed_decimal_string(at, 20) == "0.50694490510302886189");
    sbp::ExactRational below = sbp::parse_rational(j["prob_below"]["exact"].get<std::string>());
    CHECK(sbp::rational_cmp(below, sbp::ExactRational(1, 2)) == std::strong_ordering::less);
}

TEST_CASE("table: explicit lists") {
    RunResult r = run("table --m-list 2 --p-list 0.5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("m,p,r,n_min,prob_at,certification") != std::string::npos);
    CHECK(r.out.find("2,1/2,2,2,") != std::string::npos);
}

TEST_CASE("table: json cell for m=10") {
    RunResult r = run("table --m-list 10 --p-list 0.5 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json rows = nlohmann::json::parse(r.out);
    CHECK(rows[0]["m"] == 10);
    CHECK(rows[0]["p"] == "1/2");
    CHECK(rows[0]["n_min"] == 41);
}

TEST_CASE("table: usage errors") {
    CHECK(run("table").exit_code == 2);
    CHECK(run("table --preset unknown").exit_code == 2);
    CHECK(run("table --m-list 5 --p-list 0.5 --check").exit_code == 2);
    CHECK(run("table --preset dasgupta2005 --m-list 5").exit_code == 2);
}

TEST_CASE("stirling values") {
    CHECK(run("stirling --n 4 --k 2").out == "7\n");
    CHECK(run("stirling --n 7 --k 2 --r 3").out == "35\n");
    CHECK(run("stirling --n 7 --k 3 --r 2").out == "105\n");
    CHECK(run("stirling --n 7 --k 2 --r 3 --labeled").out == "70\n");
    CHECK(run("stirling --n 7 --k 2 --r 0").exit_code == 2);
}

TEST_CASE("verify: small run passes and is seed-deterministic") {
    RunResult a = run("verify --max-m 3 --max-n 4 --mc-trials 20000 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("verification passed") != std::string::npos);
    RunResult b = run("verify --max-m 3 --max-n 4 --mc-trials 20000 --seed 42");
    CHECK(a.out == b.out);
}

TEST_CASE("unknown subcommand is a usage error") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
}
