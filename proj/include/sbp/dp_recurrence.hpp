#pragma once

#include "sbp/exact_num.hpp"

#include <functional>
#include <vector>

namespace sbp {

// One person-count slice of the occupancy-profile dynamic program: entry
// (j, k) counts assignments of `people()` birthdays to `days()` days that
// produce exactly j days holding >= 2 birthdays and k singleton days.
class DpLayer {
public:
    DpLayer(long long people, long long days);

    long long people() const { return people_; }
    long long days() const { return days_; }
    long long max_multi() const { return max_multi_; }      // largest stored j
    long long max_single() const { return max_single_; }    // largest stored k

    // 0 outside the stored rectangle (those states are structurally zero).
    const BigCount& at(long long multi_days, long long single_days) const;

    BigCount total() const;                       // sum over all (j, k)
    BigCount singleton_marginal(long long k) const;  // sum over j at fixed k
    BigCount strong_numerator() const { return singleton_marginal(0); }

private:
    friend void dp_layer_sweep(long long, long long,
                               const std::function<bool(const DpLayer&)>&);
    BigCount& cell(long long multi_days, long long single_days);

    long long people_;
    long long days_;
    long long max_multi_;
    long long max_single_;
    std::vector<BigCount> cells_;  // (max_multi+1) x (max_single+1), row-major in j
};

// Visits the (j, k) layer for every person count 0..n_max in order, keeping
// only two consecutive layers alive. visit returning false stops early.
void dp_layer_sweep(long long days, long long n_max,
                    const std::function<bool(const DpLayer&)>& visit);

// Single profile count by the three-case recurrence (out-of-range indices
// are 0; T(0,0,0,m) = 1).
BigCount profile_count(long long multi_days, long long single_days, long long people,
                       long long days);

// 1/m^n times the sum of zero-singleton profiles; the first-principles route
// to the strong birthday probability. Empty groups get probability 1.
ExactRational prob_strong_birthday_dp(long long m, long long n);

}  // namespace sbp
