#include "sbp/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbp {

namespace {
const BigCount kZero = 0;
}

void BinomialCache::prepare(int max_t) {
    if (max_t < 0) {
        return;
    }
    for (int t = static_cast<int>(rows_.size()); t <= max_t; ++t) {
        std::vector<BigCount> row(static_cast<std::size_t>(t) + 1);
        row.front() = 1;
        row.back() = 1;
        for (int s = 1; s < t; ++s) {
            row[static_cast<std::size_t>(s)] =
                rows_[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(s - 1)] +
                rows_[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(s)];
        }
        rows_.push_back(std::move(row));
    }
}

const BigCount& BinomialCache::binomial(int t, int s) const {
    if (t < 0 || s < 0 || s > t) {
        return zero_;
    }
    if (t >= static_cast<int>(rows_.size())) {
        throw std::out_of_range("BinomialCache: row " + std::to_string(t) + " not prepared");
    }
    return rows_[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
}

BigCount binomial(long long t, long long s) {
    if (t < 0 || s < 0 || s > t) {
        return 0;
    }
    if (s > t - s) {
        s = t - s;
    }
    BigCount result = 1;
    for (long long i = 1; i <= s; ++i) {
        result *= t - s + i;
        result /= i;  // exact: i consecutive factors are divisible by i!
    }
    return result;
}

BigCount factorial(long long n) {
    if (n < 0) {
        return 0;
    }
    BigCount result = 1;
    for (long long i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigCount falling_factorial(long long m, long long k) {
    if (k == 0) {
        return 1;
    }
    if (k < 0 || m < 0 || k > m) {
        return 0;
    }
    BigCount result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= m - i;
    }
    return result;
}

BigCount stirling2(long long n, long long k) {
    if (n < 0 || k < 0) {
        return 0;
    }
    if (n == 0) {
        return k == 0 ? 1 : 0;
    }
    if (k == 0 || k > n) {
        return 0;
    }
    // bottom-up over object count, one row retained, columns clamped to k
    std::vector<BigCount> row{1};  // row for 0 objects
    for (long long objects = 1; objects <= n; ++objects) {
        long long width = std::min(objects, k);
        std::vector<BigCount> next(static_cast<std::size_t>(width) + 1);
        for (long long j = 1; j <= width; ++j) {
            const BigCount& split = static_cast<std::size_t>(j - 1) < row.size()
                                        ? row[static_cast<std::size_t>(j - 1)]
                                        : kZero;
            const BigCount& merge = static_cast<std::size_t>(j) < row.size()
                                        ? row[static_cast<std::size_t>(j)]
                                        : kZero;
            next[static_cast<std::size_t>(j)] = split + merge * j;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

BigCount assoc_stirling2(long long n, long long k, int r) {
    if (r <= 0) {
        throw std::invalid_argument("assoc_stirling2: r must be >= 1");
    }
    if (n < 0 || k < 0) {
        return 0;
    }
    if (n == 0 && k == 0) {
        return 1;
    }
    if (k == 0 || n == 0 || n < k * r) {
        return 0;
    }
    BigCount result = 0;
    assoc_stirling_row_sweep_as<BigCount>(
        r, n,
        [&](long long row_n, std::span<const BigCount> row) {
            if (row_n == n) {
                result = row[static_cast<std::size_t>(k)];
            }
            return true;
        },
        k);
    return result;
}

void assoc_stirling_row_sweep(int r, long long n_max, const ExactRowVisitor& visit,
                              long long k_cap) {
    assoc_stirling_row_sweep_as<BigCount>(r, n_max, visit, k_cap);
}

void assoc_stirling_row_sweep_scaled(int r, long long n_max, const ScaledRowVisitor& visit,
                                     long long k_cap) {
    assoc_stirling_row_sweep_as<ScaledFloat>(r, n_max, visit, k_cap);
}

}  // namespace sbp
