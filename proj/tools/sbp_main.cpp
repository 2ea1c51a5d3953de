#include "sbp/assoc_evaluator.hpp"
#include "sbp/combinatorics.hpp"
#include "sbp/dp_recurrence.hpp"
#include "sbp/formula.hpp"
#include "sbp/oracle.hpp"
#include "sbp/parallel.hpp"
#include "sbp/report.hpp"
#include "sbp/solver.hpp"
#include "sbp/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit codes: 0 success, 1 mismatch/verification failure, 2 usage error,
// 3 resource abort (scan cap or enumeration budget).
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << text;
}

sbp::SolvePolicy parse_policy(const std::string& name) {
    if (name == "auto") {
        return sbp::SolvePolicy::automatic;
    }
    if (name == "exact") {
        return sbp::SolvePolicy::exact_scan;
    }
    if (name == "scaled") {
        return sbp::SolvePolicy::scaled_scan;
    }
    throw UsageError("unknown policy: " + name);
}

// ---- prob ----------------------------------------------------------------

struct ProbArgs {
    long long m = 365;
    long long n = 0;
    std::optional<long long> k;
    std::optional<int> r;
    std::string method = "all";
    std::string mode = "exact";
    int digits = 20;
    std::string format = "text";
    bool emit_layers = false;
    std::string output;
};

struct MethodValue {
    std::string method;
    sbp::ProbValue value;
};

int run_prob(const ProbArgs& args) {
    if (args.k.has_value() == args.r.has_value()) {
        throw UsageError("give exactly one of --k (singleton count) or --r (min occupancy)");
    }
    if (args.method != "formula" && args.method != "dp" && args.method != "stirling" &&
        args.method != "all") {
        throw UsageError("unknown method: " + args.method);
    }
    if (args.mode != "exact" && args.mode != "scaled") {
        throw UsageError("unknown mode: " + args.mode);
    }

    std::vector<std::string> applicable;
    if (args.k) {
        applicable = {"formula", "dp"};
        if (*args.k == 0) {
            applicable.push_back("stirling");
        }
    } else {
        if (*args.r < 2) {
            throw UsageError("--r must be at least 2");
        }
        applicable = {"stirling"};
        if (*args.r == 2) {
            applicable.insert(applicable.begin(), {"formula", "dp"});
        }
    }

    std::vector<std::string> selected;
    if (args.method == "all") {
        selected = applicable;
    } else {
        if (std::find(applicable.begin(), applicable.end(), args.method) ==
            applicable.end()) {
            throw UsageError("--method " + args.method + " does not apply to this query");
        }
        selected = {args.method};
    }
    if (args.mode == "scaled" &&
        !(selected.size() == 1 && selected[0] == "stirling")) {
        throw UsageError("--mode scaled applies only to --method stirling");
    }
    if (args.emit_layers && !(selected.size() == 1 && selected[0] == "dp")) {
        throw UsageError("--emit-layers requires --method dp");
    }

    const long long k = args.k.value_or(0);
    const int r = args.r.value_or(2);

    std::vector<MethodValue> values;
    for (const std::string& method : selected) {
        if (method == "formula") {
            values.push_back({method, sbp::prob_exact_singletons(
                                          {.days = args.m, .people = args.n, .singletons = k})});
        } else if (method == "dp") {
            if (args.m == 0 && args.n > 0) {
                throw std::invalid_argument("dp probability: m = 0 with people present");
            }
            sbp::BigCount marginal = args.n == 0 ? sbp::BigCount(k == 0 ? 1 : 0)
                                                 : sbp::BigCount(0);
            if (args.n > 0) {
                sbp::dp_layer_sweep(args.m, args.n, [&](const sbp::DpLayer& layer) {
                    if (args.emit_layers) {
                        std::cout << layer.people() << "," << layer.total().str() << "\n";
                    }
                    if (layer.people() == args.n) {
                        marginal = layer.singleton_marginal(k);
                    }
                    return true;
                });
            }
            values.push_back(
                {method, sbp::ExactRational(
                             marginal, sbp::big_pow(args.m, static_cast<unsigned long long>(
                                                                args.n)))});
        } else {  // stirling
            sbp::SharedBirthdayQuery q{.days = args.m, .people = args.n, .min_occupancy = r};
            if (args.mode == "scaled") {
                values.push_back({method, sbp::prob_shared_at_least_scaled(q)});
            } else {
                values.push_back({method, sbp::prob_shared_at_least(q)});
            }
        }
    }

    bool comparable = values.size() > 1;
    bool match = true;
    for (std::size_t i = 1; i < values.size() && comparable; ++i) {
        match = match && sbp::rational_cmp(std::get<sbp::ExactRational>(values[0].value),
                                           std::get<sbp::ExactRational>(values[i].value)) ==
                             std::strong_ordering::equal;
    }

    std::ostringstream out;
    if (args.format == "json") {
        nlohmann::json j;
        j["m"] = args.m;
        j["n"] = args.n;
        if (args.k) {
            j["k"] = *args.k;
        } else {
            j["r"] = *args.r;
        }
        j["mode"] = args.mode;
        nlohmann::json methods = nlohmann::json::object();
        for (const MethodValue& v : values) {
            methods[v.method] = sbp::prob_json(v.value, args.digits);
        }
        j["methods"] = methods;
        if (comparable) {
            j["match"] = match;
        }
        out << j.dump(2) << "\n";
    } else {
        for (const MethodValue& v : values) {
            out << v.method << ": " << sbp::prob_decimal(v.value, args.digits);
            if (std::holds_alternative<sbp::ExactRational>(v.value)) {
                out << "  (" << sbp::to_fraction_string(std::get<sbp::ExactRational>(v.value))
                    << ")";
            }
            out << "\n";
        }
        if (comparable) {
            out << (match ? "MATCH" : "MISMATCH") << "\n";
        }
    }
    write_output(out.str(), args.output);
    return comparable && !match ? kExitMismatch : kExitOk;
}

// ---- min-n ---------------------------------------------------------------

struct MinNArgs {
    long long m = 365;
    std::string p = "0.5";
    int r = 2;
    long long scan_cap = 0;
    std::string policy = "auto";
    int digits = 20;
    std::string format = "text";
    std::string output;
};

int run_min_n(const MinNArgs& args) {
    sbp::ThresholdQuery query{.days = args.m,
                              .threshold = sbp::parse_rational(args.p),
                              .min_occupancy = args.r,
                              .scan_cap = args.scan_cap};
    sbp::SolverResult result = sbp::min_people(query, parse_policy(args.policy));
    std::ostringstream out;
    if (args.format == "json") {
        sbp::TableCell cell{.days = args.m,
                            .threshold = query.threshold,
                            .min_occupancy = args.r,
                            .result = result};
        out << sbp::cell_json(cell, args.digits).dump(2) << "\n";
    } else {
        out << "n_min: " << result.n_min << "\n";
        out << "prob_below: " << sbp::prob_decimal(result.prob_below, args.digits) << "\n";
        out << "prob_at: " << sbp::prob_decimal(result.prob_at, args.digits) << "\n";
        out << "certification: " << sbp::to_string(result.certification) << "\n";
        out << "rows_scanned: " << result.rows_scanned << "\n";
    }
    write_output(out.str(), args.output);
    return kExitOk;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
    std::string preset;
    std::vector<long long> m_list;
    std::vector<std::string> p_list;
    int r = 2;
    std::string format = "markdown";
    bool check = false;
    int jobs = sbp::detail::default_jobs();
    std::string policy = "auto";
    int digits = 20;
    std::string output;
};

int run_table(const TableArgs& args) {
    std::vector<long long> m_list;
    std::vector<sbp::ExactRational> p_list;
    const sbp::ReferenceTable* reference = nullptr;

    if (!args.preset.empty()) {
        if (args.preset != "dasgupta2005") {
            throw UsageError("unknown preset: " + args.preset);
        }
        if (!args.m_list.empty() || !args.p_list.empty()) {
            throw UsageError("--preset conflicts with --m-list/--p-list");
        }
        reference = &sbp::dasgupta2005_table();
        m_list = reference->m_list;
        p_list = reference->p_list;
    } else {
        if (args.m_list.empty() || args.p_list.empty()) {
            throw UsageError("need --preset or both --m-list and --p-list");
        }
        if (args.check) {
            throw UsageError("--check requires --preset");
        }
        m_list = args.m_list;
        for (const std::string& p : args.p_list) {
            p_list.push_back(sbp::parse_rational(p));
        }
    }

    std::vector<sbp::TableCell> cells =
        sbp::solve_table(m_list, p_list, args.r, args.jobs, parse_policy(args.policy));

    sbp::OutputSpec spec{sbp::parse_output_format(args.format), args.digits};
    write_output(sbp::render_table(cells, spec), args.output);

    if (!args.check) {
        return kExitOk;
    }
    int mismatches = 0;
    for (std::size_t row = 0; row < p_list.size(); ++row) {
        for (std::size_t col = 0; col < m_list.size(); ++col) {
            const sbp::TableCell& cell = cells[row * m_list.size() + col];
            long long expected = reference->expected[row][col];
            if (cell.result.n_min != expected) {
                ++mismatches;
                std::cerr << "MISMATCH m=" << cell.days << " p="
                          << sbp::to_fraction_string(cell.threshold) << ": got "
                          << cell.result.n_min << ", expected " << expected << "\n";
            }
        }
    }
    if (mismatches == 0) {
        std::cerr << "check: all " << cells.size() << " cells match\n";
        return kExitOk;
    }
    return kExitMismatch;
}

// ---- stirling ------------------------------------------------------------

struct StirlingArgs {
    long long n = 0;
    long long k = 0;
    int r = 1;
    bool labeled = false;
    std::string output;
};

int run_stirling(const StirlingArgs& args) {
    if (args.r <= 0) {
        throw UsageError("--r must be >= 1");
    }
    sbp::BigCount value = args.r == 1 ? sbp::stirling2(args.n, args.k)
                                      : sbp::assoc_stirling2(args.n, args.k, args.r);
    if (args.labeled) {
        value *= sbp::factorial(args.k);
    }
    write_output(value.str() + "\n", args.output);
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    long long max_m = 8;
    long long max_n = 12;
    std::uint64_t mc_trials = 20'000;
    std::uint64_t seed = 1;
    int jobs = sbp::detail::default_jobs();
};

int run_verify(const VerifyArgs& args) {
    sbp::VerificationReport report = sbp::run_verification({.max_m = args.max_m,
                                                            .max_n = args.max_n,
                                                            .mc_trials = args.mc_trials,
                                                            .seed = args.seed,
                                                            .jobs = args.jobs});
    for (const sbp::SuiteResult& suite : report.suites) {
        std::cout << (suite.failures == 0 ? "[PASS] " : "[FAIL] ") << suite.name << ": "
                  << (suite.checks - suite.failures) << "/" << suite.checks << " checks\n";
        for (const std::string& message : suite.messages) {
            std::cout << "       " << message << "\n";
        }
    }
    std::cout << (report.ok() ? "verification passed" : "verification FAILED") << " ("
              << report.total_checks() << " checks, " << report.total_failures()
              << " failures)\n";
    return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong birthday problem: exact probabilities, threshold solver, "
                 "reference-table reproduction"};
    app.require_subcommand(1);

    ProbArgs prob;
    CLI::App* prob_cmd = app.add_subcommand(
        "prob", "probability of a singleton-count or shared-birthday event");
    prob_cmd->add_option("--m", prob.m, "days in the year")->required();
    prob_cmd->add_option("--n", prob.n, "people in the group")->required();
    prob_cmd->add_option("--k", prob.k, "exact number of singleton birthdays");
    prob_cmd->add_option("--r", prob.r, "minimum occupancy of any used day (>= 2)");
    prob_cmd->add_option("--method", prob.method, "formula|dp|stirling|all");
    prob_cmd->add_option("--mode", prob.mode, "exact|scaled");
    prob_cmd->add_option("--digits", prob.digits, "decimal digits to display");
    prob_cmd->add_option("--format", prob.format, "text|json");
    prob_cmd->add_flag("--emit-layers", prob.emit_layers,
                       "stream dp layer totals as CSV (dp method only)");
    prob_cmd->add_option("--output,-o", prob.output, "write to file instead of stdout");

    MinNArgs min_n;
    CLI::App* min_n_cmd =
        app.add_subcommand("min-n", "least group size reaching a probability threshold");
    min_n_cmd->add_option("--m", min_n.m, "days in the year")->required();
    min_n_cmd->add_option("--p", min_n.p, "threshold, decimal or fraction string")->required();
    min_n_cmd->add_option("--r", min_n.r, "minimum occupancy (default 2)");
    min_n_cmd->add_option("--scan-cap", min_n.scan_cap, "abort the scan past this n");
    min_n_cmd->add_option("--policy", min_n.policy, "auto|exact|scaled");
    min_n_cmd->add_option("--digits", min_n.digits, "decimal digits to display");
    min_n_cmd->add_option("--format", min_n.format, "text|json");
    min_n_cmd->add_option("--output,-o", min_n.output, "write to file instead of stdout");

    TableArgs table;
    CLI::App* table_cmd = app.add_subcommand("table", "solve a grid of (m, p) cells");
    table_cmd->add_option("--preset", table.preset, "named grid: dasgupta2005");
    table_cmd->add_option("--m-list", table.m_list, "explicit day counts")->delimiter(',');
    table_cmd->add_option("--p-list", table.p_list, "explicit thresholds")->delimiter(',');
    table_cmd->add_option("--r", table.r, "minimum occupancy (default 2)");
    table_cmd->add_option("--format", table.format, "markdown|csv|json");
    table_cmd->add_flag("--check", table.check,
                        "compare against the embedded reference values; nonzero exit on mismatch");
    table_cmd->add_option("--jobs", table.jobs, "worker threads");
    table_cmd->add_option("--policy", table.policy, "auto|exact|scaled");
    table_cmd->add_option("--digits", table.digits, "decimal digits to display");
    table_cmd->add_option("--output,-o", table.output, "write to file instead of stdout");

    StirlingArgs stirling;
    CLI::App* stirling_cmd =
        app.add_subcommand("stirling", "Stirling / r-associated Stirling numbers");
    stirling_cmd->add_option("--n", stirling.n, "objects")->required();
    stirling_cmd->add_option("--k", stirling.k, "blocks")->required();
    stirling_cmd->add_option("--r", stirling.r, "minimum block size (default 1)");
    stirling_cmd->add_flag("--labeled", stirling.labeled, "multiply by k!");
    stirling_cmd->add_option("--output,-o", stirling.output, "write to file instead of stdout");

    VerifyArgs verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "oracle-vs-engine verification suites");
    verify_cmd->add_option("--max-m", verify.max_m, "largest day count (default 8)");
    verify_cmd->add_option("--max-n", verify.max_n, "largest group size (default 12)");
    verify_cmd->add_option("--mc-trials", verify.mc_trials, "Monte Carlo trials per case");
    verify_cmd->add_option("--seed", verify.seed, "Monte Carlo seed");
    verify_cmd->add_option("--jobs", verify.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (prob_cmd->parsed()) {
            return run_prob(prob);
        }
        if (min_n_cmd->parsed()) {
            return run_min_n(min_n);
        }
        if (table_cmd->parsed()) {
            return run_table(table);
        }
        if (stirling_cmd->parsed()) {
            return run_stirling(stirling);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sbp::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
