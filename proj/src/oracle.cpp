#include "sbp/oracle.hpp"

#include "sbp/parallel.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sbp {

namespace {

// Checks m^n against the budget and returns it as a machine word.
std::uint64_t admitted_states(long long m, long long n, const EnumerationBudget& budget) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("enumeration: negative parameter");
    }
    BigCount states = big_pow(m, static_cast<unsigned long long>(n));
    if (states > budget.max_states) {
        throw ResourceLimitError("enumeration: " + states.str() + " states exceed budget of " +
                                 std::to_string(budget.max_states));
    }
    return states.convert_to<std::uint64_t>();
}

// Base-m odometer over assignments, visiting a contiguous index range with
// an incrementally maintained day histogram. Tracks the two derived counters
// every oracle needs: singleton days and occupied days below `r`.
template <typename Visit>
void odometer_run(long long m, long long n, std::uint64_t begin, std::uint64_t end, int r,
                  Visit&& visit) {
    std::vector<long long> digits(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> occupancy(static_cast<std::size_t>(m), 0);
    long long singles = 0;     // days with exactly one birthday
    long long deficient = 0;   // occupied days with fewer than r birthdays

    auto place = [&](long long day, long long delta) {
        std::uint64_t& c = occupancy[static_cast<std::size_t>(day)];
        bool was_single = c == 1;
        bool was_deficient = c >= 1 && c < static_cast<std::uint64_t>(r);
        c += static_cast<std::uint64_t>(delta);
        bool is_single = c == 1;
        bool is_deficient = c >= 1 && c < static_cast<std::uint64_t>(r);
        singles += (is_single ? 1 : 0) - (was_single ? 1 : 0);
        deficient += (is_deficient ? 1 : 0) - (was_deficient ? 1 : 0);
    };

    // seed the odometer at `begin`
    std::uint64_t index = begin;
    for (std::size_t pos = 0; pos < digits.size(); ++pos) {
        digits[pos] = static_cast<long long>(index % static_cast<std::uint64_t>(m));
        index /= static_cast<std::uint64_t>(m);
        place(digits[pos], 1);
    }

    for (std::uint64_t state = begin; state < end; ++state) {
        visit(singles, deficient);
        if (state + 1 == end) {
            break;
        }
        // increment with carries; each digit change is one histogram update
        for (std::size_t pos = 0;; ++pos) {
            place(digits[pos], -1);
            if (++digits[pos] < m) {
                place(digits[pos], 1);
                break;
            }
            digits[pos] = 0;
            place(0, 1);
        }
    }
}

}  // namespace

std::vector<std::uint64_t> singleton_census(long long m, long long n, EnumerationBudget budget,
                                            int jobs) {
    std::uint64_t total = admitted_states(m, n, budget);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    if (total == 0) {
        return counts;
    }
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    std::mutex merge;
    detail::for_each_chunk(total, jobs, [&](std::uint64_t begin, std::uint64_t end, int) {
        std::vector<std::uint64_t> local(counts.size(), 0);
        odometer_run(m, n, begin, end, 2, [&](long long singles, long long) {
            ++local[static_cast<std::size_t>(singles)];
        });
        std::lock_guard<std::mutex> lock(merge);
        for (std::size_t i = 0; i < counts.size(); ++i) {
            counts[i] += local[i];
        }
    });
    return counts;
}

BigCount enumerate_exact_singletons(long long m, long long n, long long k,
                                    EnumerationBudget budget, int jobs) {
    if (k < 0) {
        return 0;
    }
    std::vector<std::uint64_t> counts = singleton_census(m, n, budget, jobs);
    if (k >= static_cast<long long>(counts.size())) {
        return 0;
    }
    return counts[static_cast<std::size_t>(k)];
}

BigCount enumerate_min_occupancy(long long m, long long n, int r, EnumerationBudget budget,
                                 int jobs) {
    if (r < 1) {
        throw std::invalid_argument("enumerate_min_occupancy: r must be >= 1");
    }
    std::uint64_t total = admitted_states(m, n, budget);
    if (total == 0) {
        return 0;
    }
    if (n == 0) {
        return 1;  // the empty assignment has no occupied day
    }
    std::uint64_t hits = 0;
    std::mutex merge;
    detail::for_each_chunk(total, jobs, [&](std::uint64_t begin, std::uint64_t end, int) {
        std::uint64_t local = 0;
        odometer_run(m, n, begin, end, r, [&](long long, long long deficient) {
            if (deficient == 0) {
                ++local;
            }
        });
        std::lock_guard<std::mutex> lock(merge);
        hits += local;
    });
    return hits;
}

McEstimate mc_estimate(long long m, long long n, int r, std::uint64_t trials,
                       std::uint64_t seed, int workers) {
    if (m < 1 || n < 0 || r < 1) {
        throw std::invalid_argument("mc_estimate: bad parameters");
    }
    if (trials < 1) {
        throw std::invalid_argument("mc_estimate: need at least one trial");
    }
    if (workers < 1) {
        workers = 1;
    }
    std::uint64_t day_count = static_cast<std::uint64_t>(m);
    // rejection threshold: draws below `reject` keep x % m unbiased
    std::uint64_t reject = day_count == 1 ? ~0ULL : (~0ULL / day_count) * day_count;

    std::vector<std::uint64_t> per_worker(static_cast<std::size_t>(workers), 0);
    std::uint64_t base = trials / static_cast<std::uint64_t>(workers);
    std::uint64_t extra = trials % static_cast<std::uint64_t>(workers);

    detail::for_each_index(workers, workers, [&](std::int64_t w) {
        std::uint64_t quota = base + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(w));
        std::vector<std::uint32_t> occupancy(static_cast<std::size_t>(m), 0);
        std::vector<std::uint32_t> touched;
        touched.reserve(static_cast<std::size_t>(std::min<long long>(n, m)));
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < quota; ++t) {
            touched.clear();
            for (long long i = 0; i < n; ++i) {
                std::uint64_t x;
                do {
                    x = rng();
                } while (x >= reject);
                std::uint32_t day = static_cast<std::uint32_t>(x % day_count);
                if (occupancy[day]++ == 0) {
                    touched.push_back(day);
                }
            }
            bool ok = true;
            for (std::uint32_t day : touched) {
                if (occupancy[day] < static_cast<std::uint32_t>(r)) {
                    ok = false;
                }
                occupancy[day] = 0;
            }
            if (ok) {
                ++hits;
            }
        }
        per_worker[static_cast<std::size_t>(w)] = hits;
    });

    McEstimate out;
    out.trials = trials;
    out.seed = seed;
    out.workers = workers;
    for (std::uint64_t h : per_worker) {
        out.successes += h;
    }
    out.estimate = static_cast<double>(out.successes) / static_cast<double>(trials);
    out.std_err = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
    return out;
}

}  // namespace sbp
