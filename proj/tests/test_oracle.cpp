#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbp/dp_recurrence.hpp"
#include "sbp/oracle.hpp"

#include <cmath>

using namespace sbp;

TEST_CASE("singleton enumeration on worked examples") {
    CHECK(enumerate_exact_singletons(3, 2, 0) == 3);
    CHECK(enumerate_exact_singletons(2, 2, 2) == 2);
    CHECK(enumerate_exact_singletons(9, 0, 0) == 1);
    CHECK(enumerate_exact_singletons(3, 2, 5) == 0);
    CHECK(enumerate_exact_singletons(3, 2, -1) == 0);
}

TEST_CASE("census totals the sample space") {
    for (long long m = 1; m <= 6; ++m) {
        for (long long n = 0; n <= 6; ++n) {
            std::vector<std::uint64_t> census = singleton_census(m, n);
            std::uint64_t total = 0;
            for (std::uint64_t c : census) {
                total += c;
            }
            CHECK(BigCount(total) == big_pow(m, static_cast<unsigned long long>(n)));
        }
    }
}

TEST_CASE("minimum-occupancy enumeration on worked examples") {
    CHECK(enumerate_min_occupancy(2, 2, 2) == 2);
    CHECK(enumerate_min_occupancy(3, 4, 2) == 21);
    CHECK(enumerate_min_occupancy(3, 2, 3) == 0);
    CHECK(enumerate_min_occupancy(4, 6, 3) == 124);
    CHECK(enumerate_min_occupancy(5, 0, 2) == 1);
}

TEST_CASE("enumeration equals the layer dp for r = 2") {
    for (long long m = 1; m <= 6; ++m) {
        for (long long n = 0; n <= 8; ++n) {
            BigCount dp_numerator = 0;
            dp_layer_sweep(m, n, [&](const DpLayer& layer) {
                if (layer.people() == n) {
                    dp_numerator = layer.strong_numerator();
                }
                return true;
            });
            CHECK(enumerate_min_occupancy(m, n, 2) == dp_numerator);
        }
    }
}

TEST_CASE("budget refusals") {
    EnumerationBudget tight{1000};
    CHECK_THROWS_AS(singleton_census(10, 4, tight), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_min_occupancy(10, 10, 2, tight), ResourceLimitError);
    CHECK_NOTHROW(singleton_census(10, 3, tight));
}

TEST_CASE("chunked enumeration equals the single-threaded pass") {
    for (int jobs : {2, 3, 7}) {
        CHECK(singleton_census(5, 7, {}, jobs) == singleton_census(5, 7));
        CHECK(enumerate_min_occupancy(4, 8, 2, {}, jobs) ==
              enumerate_min_occupancy(4, 8, 2));
    }
}

TEST_CASE("Monte Carlo determinism and degenerate cases") {
    McEstimate a = mc_estimate(7, 9, 2, 20'000, 42);
    McEstimate b = mc_estimate(7, 9, 2, 20'000, 42);
    CHECK(a.successes == b.successes);
    CHECK(a.workers == 1);

    McEstimate two = mc_estimate(7, 9, 2, 20'000, 42, 4);
    McEstimate two_again = mc_estimate(7, 9, 2, 20'000, 42, 4);
    CHECK(two.successes == two_again.successes);
    CHECK(two.workers == 4);

    McEstimate sure = mc_estimate(1, 5, 2, 1'000, 9);
    CHECK(sure.estimate == 1.0);
    CHECK(sure.successes == 1'000);

    McEstimate lonely = mc_estimate(5, 1, 2, 1'000, 9);
    CHECK(lonely.successes == 0);

    CHECK_THROWS_AS(mc_estimate(5, 3, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_estimate(0, 3, 2, 10, 1), std::invalid_argument);
}

TEST_CASE("Monte Carlo agrees with enumeration within five sigma") {
    const std::uint64_t trials = 1'000'000;
    McEstimate est = mc_estimate(2, 2, 2, trials, 1234);
    double exact = 0.5;  // 2 of the 4 assignments put both people together
    CHECK(std::fabs(est.estimate - exact) <= 5.0 * est.std_err);
    CHECK(est.std_err == doctest::Approx(std::sqrt(est.estimate * (1 - est.estimate) /
                                                   static_cast<double>(trials))));

    BigCount hits = enumerate_min_occupancy(6, 8, 2);
    double reference = hits.convert_to<double>() / std::pow(6.0, 8.0);
    McEstimate medium = mc_estimate(6, 8, 2, 200'000, 77, 3);
    CHECK(std::fabs(medium.estimate - reference) <= 5.0 * medium.std_err + 1e-9);
}
