#include "sbp/formula.hpp"

#include "sbp/combinatorics.hpp"

#include <cassert>
#include <stdexcept>

namespace sbp {

BigCount singleton_overcount(const SingletonCountQuery& q) {
    const long long m = q.days, n = q.people, k = q.singletons;
    if (m < 0 || n < 0 || k < 0 || k > m || k > n) {
        return 0;
    }
    return binomial(m, k) * binomial(n, k) * factorial(k) *
           big_pow(m - k, static_cast<unsigned long long>(n - k));
}

BigCount count_exact_singletons(const SingletonCountQuery& q) {
    const long long m = q.days, n = q.people, k = q.singletons;
    if (m < 0 || n < 0 || k < 0) {
        return 0;
    }
    const long long j_hi = std::min(n, m);  // C(m,j) kills terms beyond m
    if (k > j_hi) {
        return 0;
    }
    // One pass over j = k..j_hi with every per-term factor updated
    // incrementally; each update divides exactly.
    BigCount choose_mj = binomial(m, k);
    BigCount choose_nj = binomial(n, k);
    BigCount choose_jk = 1;  // C(j, k)
    BigCount fact_j = factorial(k);
    BigCount sum = 0;  // signed inside the alternation only
    for (long long j = k; j <= j_hi; ++j) {
        if (j > k) {
            choose_mj = choose_mj * (m - j + 1) / j;
            choose_nj = choose_nj * (n - j + 1) / j;
            choose_jk = choose_jk * j / (j - k);
            fact_j *= j;
        }
        BigCount term = choose_jk * choose_mj * choose_nj * fact_j *
                        big_pow(m - j, static_cast<unsigned long long>(n - j));
        if ((j - k) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    assert(sum >= 0);
    return sum;
}

ExactRational prob_exact_singletons(const SingletonCountQuery& q) {
    if (q.days < 0 || q.people < 0 || q.singletons < 0) {
        throw std::invalid_argument("prob_exact_singletons: negative parameter");
    }
    if (q.people == 0) {
        return q.singletons == 0 ? ExactRational(1) : ExactRational(0);
    }
    if (q.days == 0) {
        throw std::invalid_argument("prob_exact_singletons: m = 0 with people present");
    }
    ExactRational p(count_exact_singletons(q),
                    big_pow(q.days, static_cast<unsigned long long>(q.people)));
    assert(p >= 0 && p <= 1);
    return p;
}

ExactRational prob_strong_birthday_formula(long long m, long long n) {
    return prob_exact_singletons({.days = m, .people = n, .singletons = 0});
}

}  // namespace sbp
