#pragma once

#include "sbp/exact_num.hpp"

#include <cstdint>
#include <vector>

namespace sbp {

// Ground-truth layer: exhaustive enumeration over all m^n assignments for
// tiny instances, seeded Monte Carlo for medium ones. Test machinery, not a
// performance path.

struct EnumerationBudget {
    std::uint64_t max_states = 10'000'000;  // refuse instances with m^n above this
};

// counts[k] = number of assignments with exactly k singleton days, for
// k = 0..n. One odometer pass with an incrementally maintained histogram.
std::vector<std::uint64_t> singleton_census(long long m, long long n,
                                            EnumerationBudget budget = {}, int jobs = 1);

BigCount enumerate_exact_singletons(long long m, long long n, long long k,
                                    EnumerationBudget budget = {}, int jobs = 1);

// Assignments in which every day holding at least one birthday holds >= r.
BigCount enumerate_min_occupancy(long long m, long long n, int r,
                                 EnumerationBudget budget = {}, int jobs = 1);

struct McEstimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double estimate = 0.0;
    double std_err = 0.0;
    std::uint64_t seed = 0;
    int workers = 1;  // part of the reproducibility contract
};

// Seeded mt19937_64 stream per worker (seed + worker index); day draws use
// rejection sampling, so the stream is identical on every platform for a
// fixed (seed, workers) pair. Success: every occupied day has >= r people.
McEstimate mc_estimate(long long m, long long n, int r, std::uint64_t trials,
                       std::uint64_t seed, int workers = 1);

}  // namespace sbp
