#pragma once

#include "sbp/exact_num.hpp"

namespace sbp {

// Parameters of a "exactly k singleton birthdays" count: n people assigned
// uniformly to m days. Any non-negative combination is answerable;
// impossible configurations simply count 0.
struct SingletonCountQuery {
    long long days = 0;        // m
    long long people = 0;      // n
    long long singletons = 0;  // k
};

// Ways to pin k singleton days before correcting for extra singletons among
// the rest: C(m,k) * C(n,k) * k! * (m-k)^(n-k). Over-counts by design.
BigCount singleton_overcount(const SingletonCountQuery& q);

// Exact count of assignments with exactly k singleton days, by alternating
// inclusion-exclusion over the overcounts. Computed entirely in exact
// integers (the alternating sum cancels catastrophically in floating point).
BigCount count_exact_singletons(const SingletonCountQuery& q);

// count_exact_singletons / m^n. Rejects m = 0 with n > 0 (empty sample
// space); an empty group has probability 1 of zero singletons.
ExactRational prob_exact_singletons(const SingletonCountQuery& q);

// The k = 0 specialization: probability that everyone in a group of n
// shares their birthday with someone else in the group.
ExactRational prob_strong_birthday_formula(long long m, long long n);

}  // namespace sbp
