#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbp/combinatorics.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <vector>

using namespace sbp;

namespace {

// Brute-force oracle: walk every set partition of {0..n-1} and count those
// with exactly k blocks, all of size >= r. Independent of the recurrences.
void walk_partitions(std::vector<std::vector<int>>& blocks, int next, int n,
                     const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    if (next == n) {
        emit(blocks);
        return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(next);
        walk_partitions(blocks, next + 1, n, emit);
        blocks[b].pop_back();
    }
    blocks.push_back({next});
    walk_partitions(blocks, next + 1, n, emit);
    blocks.pop_back();
}

std::uint64_t partition_count(int n, int k, int r) {
    std::uint64_t count = 0;
    std::vector<std::vector<int>> blocks;
    walk_partitions(blocks, 0, n, [&](const std::vector<std::vector<int>>& p) {
        if (static_cast<int>(p.size()) != k) {
            return;
        }
        for (const auto& block : p) {
            if (static_cast<int>(block.size()) < r) {
                return;
            }
        }
        ++count;
    });
    return count;
}

// Memoized form of the three-case recurrence, written independently of the
// streaming sweep it checks.
BigCount assoc_recursive(long long n, long long k, int r,
                         std::map<std::pair<long long, long long>, BigCount>& memo) {
    if (n == 0 && k == 0) {
        return 1;
    }
    if ((n <= 0 && k > 0) || (n > 0 && k <= 0) || k < 0 || n < k * r) {
        return 0;
    }
    auto it = memo.find({n, k});
    if (it != memo.end()) {
        return it->second;
    }
    BigCount value = assoc_recursive(n - 1, k, r, memo) * k +
                     binomial(n - 1, r - 1) * assoc_recursive(n - r, k - 1, r, memo);
    memo.emplace(std::make_pair(n, k), value);
    return value;
}

}  // namespace

TEST_CASE("binomial point values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(365, 366) == 0);
    CHECK(binomial(50, 25) == BigCount("126410606437752"));
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("binomial cache matches the one-off computation and Pascal's rule") {
    BinomialCache cache(64);
    for (int t = 0; t <= 64; ++t) {
        BigCount row_sum = 0;
        for (int s = 0; s <= t; ++s) {
            CHECK(cache.binomial(t, s) == binomial(t, s));
            if (s > 0 && s < t) {
                CHECK(cache.binomial(t, s) ==
                      cache.binomial(t - 1, s - 1) + cache.binomial(t - 1, s));
            }
            row_sum += cache.binomial(t, s);
        }
        CHECK(row_sum == big_pow(2, static_cast<unsigned long long>(t)));
    }
    CHECK(cache.binomial(10, 11) == 0);
    CHECK(cache.binomial(10, -2) == 0);
    CHECK_THROWS_AS(cache.binomial(65, 3), std::out_of_range);
    cache.prepare(70);  // monotone growth
    CHECK(cache.binomial(70, 35) == binomial(70, 35));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(0, 0) == 1);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(10, 10) == 3628800);
    CHECK(falling_factorial(3, 4) == 0);
    for (long long m = 0; m <= 12; ++m) {
        for (long long k = 0; k <= m; ++k) {
            CHECK(falling_factorial(m, k) == binomial(m, k) * factorial(k));
        }
    }
}

TEST_CASE("stirling2 point values and base cases") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(6, 3) == 90);
    CHECK(stirling2(10, 4) == 34105);
    CHECK(stirling2(0, 3) == 0);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(5, 1) == 1);
    CHECK(stirling2(5, 5) == 1);
    CHECK(stirling2(2, 5) == 0);
    CHECK(stirling2(-1, 2) == 0);
    CHECK(stirling2(2, -1) == 0);
}

TEST_CASE("stirling2 matches the partition enumeration oracle") {
    for (int n = 0; n <= 9; ++n) {
        for (int k = 0; k <= n + 1; ++k) {
            CHECK(stirling2(n, k) == partition_count(n, k, 1));
        }
    }
}

TEST_CASE("labeled-count identity: sum_k ff(m,k) * S2(n,k) = m^n") {
    for (long long n = 1; n <= 20; ++n) {
        for (long long m = 1; m <= 20; ++m) {
            BigCount sum = 0;
            for (long long k = 0; k <= n; ++k) {
                sum += falling_factorial(m, k) * stirling2(n, k);
            }
            CHECK(sum == big_pow(m, static_cast<unsigned long long>(n)));
        }
    }
}

TEST_CASE("associated stirling point values") {
    CHECK(assoc_stirling2(7, 2, 3) == 35);
    CHECK(assoc_stirling2(7, 2, 2) == 56);
    CHECK(assoc_stirling2(7, 3, 2) == 105);
    CHECK(assoc_stirling2(5, 3, 2) == 0);  // n < k*r
    CHECK(assoc_stirling2(0, 0, 2) == 1);
    CHECK(assoc_stirling2(4, 1, 2) == 1);
    CHECK(assoc_stirling2(4, 2, 2) == 3);
    CHECK(assoc_stirling2(8, 3, 2) == 490);
    CHECK(assoc_stirling2(9, 3, 3) == 280);
    CHECK(assoc_stirling2(10, 2, 4) == 336);
    CHECK_THROWS_AS(assoc_stirling2(4, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(assoc_stirling2(4, 2, -3), std::invalid_argument);
}

TEST_CASE("associated stirling matches the partition enumeration oracle") {
    for (int r = 2; r <= 4; ++r) {
        for (int n = 0; n <= 9; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(assoc_stirling2(n, k, r) == partition_count(n, k, r));
            }
        }
    }
}

TEST_CASE("r = 1 reduces to the classic recurrence") {
    for (long long n = 0; n <= 30; ++n) {
        for (long long k = 0; k <= n; ++k) {
            CHECK(assoc_stirling2(n, k, 1) == stirling2(n, k));
        }
    }
}

TEST_CASE("single-block column") {
    for (int r = 2; r <= 4; ++r) {
        for (long long n = 1; n < r; ++n) {
            CHECK(assoc_stirling2(n, 1, r) == 0);
        }
        for (long long n = r; n <= 3 * r; ++n) {
            CHECK(assoc_stirling2(n, 1, r) == 1);
        }
    }
}

TEST_CASE("diagonal is one for r = 1") {
    for (long long n = 0; n <= 25; ++n) {
        CHECK(assoc_stirling2(n, n, 1) == 1);
    }
}

TEST_CASE("streaming sweep equals the memoized recursion up to n = 60") {
    for (int r : {2, 3, 4}) {
        std::map<std::pair<long long, long long>, BigCount> memo;
        assoc_stirling_row_sweep(r, 60, [&](long long n, std::span<const BigCount> row) {
            CHECK(static_cast<long long>(row.size()) == n / r + 1);
            for (long long k = 0; k < static_cast<long long>(row.size()); ++k) {
                CHECK(row[static_cast<std::size_t>(k)] == assoc_recursive(n, k, r, memo));
            }
            return true;
        });
    }
}

TEST_CASE("sweep rows from the worked examples") {
    SUBCASE("r=2 up to n=4") {
        std::vector<BigCount> last;
        assoc_stirling_row_sweep(2, 4, [&](long long n, std::span<const BigCount> row) {
            if (n == 4) {
                last.assign(row.begin(), row.end());
            }
            return true;
        });
        REQUIRE(last.size() == 3);
        CHECK(last[0] == 0);
        CHECK(last[1] == 1);
        CHECK(last[2] == 3);
    }
    SUBCASE("r=2, n=1 has no valid block") {
        assoc_stirling_row_sweep(2, 1, [&](long long n, std::span<const BigCount> row) {
            if (n == 1) {
                CHECK(row.size() == 1);
                CHECK(row[0] == 0);
            }
            return true;
        });
    }
    SUBCASE("r=3, n=7 contains 35 at k=2") {
        assoc_stirling_row_sweep(3, 7, [&](long long n, std::span<const BigCount> row) {
            if (n == 7) {
                REQUIRE(row.size() == 3);
                CHECK(row[2] == 35);
            }
            return true;
        });
    }
}

TEST_CASE("sweep cap clamps row width without changing shared entries") {
    std::vector<std::vector<BigCount>> capped, full;
    assoc_stirling_row_sweep(
        2, 20,
        [&](long long, std::span<const BigCount> row) {
            capped.emplace_back(row.begin(), row.end());
            return true;
        },
        3);
    assoc_stirling_row_sweep(2, 20, [&](long long, std::span<const BigCount> row) {
        full.emplace_back(row.begin(), row.end());
        return true;
    });
    for (std::size_t n = 0; n < capped.size(); ++n) {
        CHECK(capped[n].size() == std::min<std::size_t>(full[n].size(), 4));
        for (std::size_t k = 0; k < capped[n].size(); ++k) {
            CHECK(capped[n][k] == full[n][k]);
        }
    }
}

TEST_CASE("scaled sweep tracks the exact rows within the carried bound") {
    std::vector<std::vector<BigCount>> exact;
    assoc_stirling_row_sweep(2, 40, [&](long long, std::span<const BigCount> row) {
        exact.emplace_back(row.begin(), row.end());
        return true;
    });
    assoc_stirling_row_sweep_scaled(2, 40, [&](long long n, std::span<const ScaledFloat> row) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            const BigCount& want = exact[static_cast<std::size_t>(n)][k];
            if (want == 0) {
                CHECK(row[k].is_zero());
                continue;
            }
            double gap = std::fabs((row[k] / to_scaled(want)).to_double() - 1.0);
            double bound = row[k].relative_error_bound() + 4 * ScaledFloat::kUnitRoundoff;
            CHECK(gap <= bound);
        }
        return true;
    });
}
