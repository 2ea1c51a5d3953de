#pragma once

#include "sbp/combinatorics.hpp"
#include "sbp/exact_num.hpp"

#include <cstdint>
#include <functional>
#include <variant>

namespace sbp {

// Probability query: n people over m days, every occupied day must hold at
// least r birthdays. r >= 2 (r = 1 is identically true and rejected).
struct SharedBirthdayQuery {
    long long days = 365;     // m
    long long people = 0;     // n
    int min_occupancy = 2;    // r
};

// Distributions of n people over k distinguishable days, each day taking at
// least r people: k! * {n brace k}_{>=r}.
BigCount labeled_block_count(long long n, long long k, int r);

// Exact rational value of the query's probability.
ExactRational prob_shared_at_least(const SharedBirthdayQuery& q);

// Scaled-float value; every term in the sum is non-negative, so the carried
// op count bounds the relative error (no cancellation on this path).
ScaledFloat prob_shared_at_least_scaled(const SharedBirthdayQuery& q);

// One row of a probability sweep over group sizes.
struct ProbSweepRow {
    long long people = 0;
    std::variant<ExactRational, ScaledFloat> prob;
    NumberMode mode = NumberMode::exact;
    std::uint64_t op_count = 0;  // scaled mode: error bound is op_count * unit roundoff

    const ExactRational& exact() const { return std::get<ExactRational>(prob); }
    const ScaledFloat& scaled() const { return std::get<ScaledFloat>(prob); }
};

// Emits the probability for every n = 0..n_max in order, sharing one
// streaming pass over the block-count rows (total work ~ n_max^2 / r value
// operations, row width additionally clamped at m). visit returning false
// stops the sweep.
void prob_sweep(long long m, int r, long long n_max, NumberMode mode,
                const std::function<bool(const ProbSweepRow&)>& visit);

}  // namespace sbp
