#include "sbp/verify.hpp"

#include "sbp/assoc_evaluator.hpp"
#include "sbp/combinatorics.hpp"
#include "sbp/dp_recurrence.hpp"
#include "sbp/formula.hpp"
#include "sbp/oracle.hpp"
#include "sbp/parallel.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace sbp {

namespace {

constexpr std::size_t kMaxMessages = 8;

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& label) {
        std::lock_guard<std::mutex> lock(mutex_);
        ++result_.checks;
        if (!ok) {
            ++result_.failures;
            if (result_.messages.size() < kMaxMessages) {
                result_.messages.push_back(label);
            }
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    std::mutex mutex_;
    SuiteResult result_;
};

bool states_admitted(long long m, long long n, std::uint64_t cap) {
    return big_pow(m, static_cast<unsigned long long>(n)) <= cap;
}

SuiteResult cross_method_suite(const VerifyOptions& opt) {
    Suite suite("cross-method equality (formula vs dp vs stirling, r=2)");
    detail::for_each_index(opt.max_m, opt.jobs, [&](std::int64_t i) {
        long long m = i + 1;
        // one dp sweep and one stirling sweep per m, formula per (m, n)
        std::vector<ExactRational> dp_probs(static_cast<std::size_t>(opt.max_n) + 1);
        dp_layer_sweep(m, opt.max_n, [&](const DpLayer& layer) {
            BigCount denom = big_pow(m, static_cast<unsigned long long>(layer.people()));
            dp_probs[static_cast<std::size_t>(layer.people())] =
                layer.people() == 0 ? ExactRational(1)
                                    : ExactRational(layer.strong_numerator(), denom);
            return true;
        });
        prob_sweep(m, 2, opt.max_n, NumberMode::exact, [&](const ProbSweepRow& row) {
            ExactRational formula = prob_strong_birthday_formula(m, row.people);
            const ExactRational& stirling = row.exact();
            const ExactRational& dp = dp_probs[static_cast<std::size_t>(row.people)];
            std::ostringstream label;
            label << "m=" << m << " n=" << row.people;
            suite.check(rational_cmp(formula, stirling) == std::strong_ordering::equal,
                        "formula != stirling at " + label.str());
            suite.check(rational_cmp(formula, dp) == std::strong_ordering::equal,
                        "formula != dp at " + label.str());
            return true;
        });
    });
    return suite.take();
}

SuiteResult oracle_suite(const VerifyOptions& opt) {
    Suite suite("oracle equivalence (exhaustive enumeration)");
    EnumerationBudget budget{opt.enumeration_states};
    detail::for_each_index(opt.max_m, opt.jobs, [&](std::int64_t i) {
        long long m = i + 1;
        for (long long n = 0; n <= opt.max_n; ++n) {
            if (!states_admitted(m, n, budget.max_states)) {
                break;
            }
            std::vector<std::uint64_t> census = singleton_census(m, n, budget);
            for (long long k = 0; k <= n; ++k) {
                BigCount expected = count_exact_singletons(
                    {.days = m, .people = n, .singletons = k});
                std::ostringstream label;
                label << "singleton count m=" << m << " n=" << n << " k=" << k;
                suite.check(expected == census[static_cast<std::size_t>(k)], label.str());
            }
            for (int r : {2, 3}) {
                BigCount brute = enumerate_min_occupancy(m, n, r, budget);
                BigCount stirling_numerator = 0;
                long long width = std::min(n / r, m);
                for (long long k = 0; k <= width; ++k) {
                    stirling_numerator +=
                        binomial(m, k) * labeled_block_count(n, k, r);
                }
                std::ostringstream label;
                label << "min-occupancy m=" << m << " n=" << n << " r=" << r;
                suite.check(brute == stirling_numerator, label.str() + " (stirling)");
                if (r == 2) {
                    BigCount dp_numerator = 0;
                    dp_layer_sweep(m, n, [&](const DpLayer& layer) {
                        if (layer.people() == n) {
                            dp_numerator = layer.strong_numerator();
                        }
                        return true;
                    });
                    suite.check(brute == dp_numerator, label.str() + " (dp)");
                }
            }
        }
    });
    return suite.take();
}

SuiteResult normalization_suite(const VerifyOptions& opt) {
    Suite suite("normalization identities");
    detail::for_each_index(opt.max_m, opt.jobs, [&](std::int64_t i) {
        long long m = i + 1;
        // layer totals and singleton-count totals must both exhaust m^n
        dp_layer_sweep(m, opt.max_n, [&](const DpLayer& layer) {
            BigCount expected =
                big_pow(m, static_cast<unsigned long long>(layer.people()));
            std::ostringstream label;
            label << "layer total m=" << m << " n=" << layer.people();
            suite.check(layer.total() == expected, label.str());
            return true;
        });
        for (long long n = 0; n <= opt.max_n; ++n) {
            BigCount sum = 0;
            for (long long k = 0; k <= n; ++k) {
                sum += count_exact_singletons({.days = m, .people = n, .singletons = k});
            }
            std::ostringstream label;
            label << "singleton-count total m=" << m << " n=" << n;
            suite.check(sum == big_pow(m, static_cast<unsigned long long>(n)), label.str());
        }
    });
    return suite.take();
}

SuiteResult monte_carlo_suite(const VerifyOptions& opt) {
    Suite suite("Monte Carlo consistency (5 sigma)");
    if (opt.mc_trials == 0) {
        return suite.take();
    }
    struct Case {
        long long m, n;
        int r;
    };
    std::vector<Case> cases;
    for (long long m : {2LL, 5LL, 10LL}) {
        if (m > opt.max_m) {
            continue;
        }
        for (long long n : {2LL, 5LL, 8LL}) {
            if (n > opt.max_n) {
                continue;
            }
            cases.push_back({m, n, 2});
        }
    }
    cases.push_back({1, 5, 2});  // estimate must be exactly 1
    detail::for_each_index(static_cast<std::int64_t>(cases.size()), opt.jobs,
                           [&](std::int64_t i) {
                               const Case& c = cases[static_cast<std::size_t>(i)];
                               ExactRational exact = prob_shared_at_least(
                                   {.days = c.m, .people = c.n, .min_occupancy = c.r});
                               McEstimate est = mc_estimate(c.m, c.n, c.r, opt.mc_trials,
                                                            opt.seed + static_cast<std::uint64_t>(i));
                               double reference = to_scaled(exact).to_double();
                               double tolerance = 5.0 * est.std_err + 1e-12;
                               std::ostringstream label;
                               label << "mc m=" << c.m << " n=" << c.n << " r=" << c.r
                                     << " est=" << est.estimate << " exact=" << reference;
                               suite.check(std::fabs(est.estimate - reference) <= tolerance,
                                           label.str());
                           });
    return suite.take();
}

}  // namespace

bool VerificationReport::ok() const {
    for (const SuiteResult& s : suites) {
        if (s.failures != 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t VerificationReport::total_checks() const {
    std::uint64_t total = 0;
    for (const SuiteResult& s : suites) {
        total += s.checks;
    }
    return total;
}

std::uint64_t VerificationReport::total_failures() const {
    std::uint64_t total = 0;
    for (const SuiteResult& s : suites) {
        total += s.failures;
    }
    return total;
}

VerificationReport run_verification(const VerifyOptions& options) {
    VerificationReport report;
    report.suites.push_back(cross_method_suite(options));
    report.suites.push_back(oracle_suite(options));
    report.suites.push_back(normalization_suite(options));
    report.suites.push_back(monte_carlo_suite(options));
    return report;
}

}  // namespace sbp
