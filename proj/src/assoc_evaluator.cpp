#include "sbp/assoc_evaluator.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace sbp {

namespace {

void check_query(const SharedBirthdayQuery& q) {
    if (q.min_occupancy < 2) {
        throw std::invalid_argument("shared-birthday query: r must be >= 2");
    }
    if (q.days < 1) {
        throw std::invalid_argument("shared-birthday query: m must be >= 1");
    }
    if (q.people < 0) {
        throw std::invalid_argument("shared-birthday query: negative people count");
    }
}

}  // namespace

BigCount labeled_block_count(long long n, long long k, int r) {
    if (r < 2) {
        throw std::invalid_argument("labeled_block_count: r must be >= 2");
    }
    return factorial(k) * assoc_stirling2(n, k, r);
}

void prob_sweep(long long m, int r, long long n_max, NumberMode mode,
                const std::function<bool(const ProbSweepRow&)>& visit) {
    if (r < 2) {
        throw std::invalid_argument("prob_sweep: r must be >= 2");
    }
    if (m < 1) {
        throw std::invalid_argument("prob_sweep: m must be >= 1");
    }
    const long long k_cap = m;  // C(m,k) vanishes past m, so wider rows add nothing

    if (mode == NumberMode::exact) {
        // ff[k] = m (m-1) ... (m-k+1), shared across rows
        std::vector<BigCount> ff{1};
        BigCount pow_mn = 1;  // m^n, advanced per row
        assoc_stirling_row_sweep(
            r, n_max,
            [&](long long n, std::span<const BigCount> row) {
                if (n > 0) {
                    pow_mn *= m;
                }
                while (ff.size() < row.size()) {
                    long long k = static_cast<long long>(ff.size());
                    ff.push_back(ff.back() * (m - k + 1));
                }
                BigCount numerator = n == 0 ? BigCount(1) : BigCount(0);
                for (std::size_t k = 1; k < row.size(); ++k) {
                    numerator += ff[k] * row[k];
                }
                ProbSweepRow out;
                out.people = n;
                out.mode = NumberMode::exact;
                out.prob = ExactRational(numerator, pow_mn);
                return visit(out);
            },
            k_cap);
        return;
    }

    std::vector<ScaledFloat> ff{ScaledFloat::from_integer(1)};
    ScaledFloat pow_mn = ScaledFloat::from_integer(1);
    const ScaledFloat m_scaled = ScaledFloat::from_integer(static_cast<std::uint64_t>(m));
    assoc_stirling_row_sweep_scaled(
        r, n_max,
        [&](long long n, std::span<const ScaledFloat> row) {
            if (n > 0) {
                pow_mn = pow_mn * m_scaled;
            }
            while (ff.size() < row.size()) {
                long long k = static_cast<long long>(ff.size());
                ff.push_back(ff.back() *
                             ScaledFloat::from_integer(static_cast<std::uint64_t>(m - k + 1)));
            }
            ScaledFloat numerator =
                n == 0 ? ScaledFloat::from_integer(1) : ScaledFloat{};
            for (std::size_t k = 1; k < row.size(); ++k) {
                numerator = numerator + ff[k] * row[k];
            }
            ProbSweepRow out;
            out.people = n;
            out.mode = NumberMode::scaled;
            ScaledFloat value = numerator.is_zero() ? ScaledFloat{} : numerator / pow_mn;
            out.op_count = value.op_count();
            out.prob = value;
            return visit(out);
        },
        k_cap);
}

ExactRational prob_shared_at_least(const SharedBirthdayQuery& q) {
    check_query(q);
    ExactRational result;
    prob_sweep(q.days, q.min_occupancy, q.people, NumberMode::exact,
               [&](const ProbSweepRow& row) {
                   if (row.people == q.people) {
                       result = row.exact();
                   }
                   return true;
               });
    assert(result >= 0 && result <= 1);
    return result;
}

ScaledFloat prob_shared_at_least_scaled(const SharedBirthdayQuery& q) {
    check_query(q);
    ScaledFloat result;
    prob_sweep(q.days, q.min_occupancy, q.people, NumberMode::scaled,
               [&](const ProbSweepRow& row) {
                   if (row.people == q.people) {
                       result = row.scaled();
                   }
                   return true;
               });
    return result;
}

}  // namespace sbp
