#pragma once

#include "sbp/exact_num.hpp"

#include <functional>
#include <span>
#include <vector>

namespace sbp {

enum class NumberMode { exact, scaled };

// Pascal-triangle table of exact binomial coefficients. Built once by
// prepare() (single-threaded), then shared read-only; queries never grow it.
class BinomialCache {
public:
    BinomialCache() = default;
    explicit BinomialCache(int max_t) { prepare(max_t); }

    // Grows the triangle up to row max_t; rows never shrink.
    void prepare(int max_t);

    int max_row() const { return static_cast<int>(rows_.size()) - 1; }

    // C(t, s); 0 for s < 0 or s > t. Throws if row t was never prepared.
    const BigCount& binomial(int t, int s) const;

private:
    std::vector<std::vector<BigCount>> rows_;
    inline static const BigCount zero_ = 0;
};

// One-off exact C(t, s) via the multiplicative formula (every division is
// exact). 0 for s < 0 or s > t.
BigCount binomial(long long t, long long s);

BigCount factorial(long long n);

// m * (m-1) * ... * (m-k+1) == C(m, k) * k!; 0 for k > m, 1 for k == 0.
BigCount falling_factorial(long long m, long long k);

// Stirling number of the second kind: partitions of n distinct objects into
// k nonempty unlabeled blocks. Negative arguments count as 0.
BigCount stirling2(long long n, long long k);

// r-associated variant: every block must have at least r objects. Matches
// stirling2 for r = 1. Rejects r <= 0.
BigCount assoc_stirling2(long long n, long long k, int r);

// Streaming generation of {n brace k}_{>=r} rows for n = 0..n_max, keeping
// only the r most recent rows. Row n spans k = 0..floor(n/r), clamped to
// k_cap when k_cap >= 0 (entries beyond a cap feed nothing below the cap, so
// clamping is lossless for capped consumers). visit(n, row) returning false
// stops the sweep early.
//
// Value must be BigCount or ScaledFloat.
template <typename Value, typename Visit>
void assoc_stirling_row_sweep_as(int r, long long n_max, Visit&& visit, long long k_cap = -1);

// Type-erased wrappers matching the two number modes.
using ExactRowVisitor = std::function<bool(long long n, std::span<const BigCount> row)>;
using ScaledRowVisitor = std::function<bool(long long n, std::span<const ScaledFloat> row)>;
void assoc_stirling_row_sweep(int r, long long n_max, const ExactRowVisitor& visit,
                              long long k_cap = -1);
void assoc_stirling_row_sweep_scaled(int r, long long n_max, const ScaledRowVisitor& visit,
                                     long long k_cap = -1);

namespace detail {

inline BigCount value_from_count(const BigCount& c, BigCount /*tag*/) { return c; }
inline ScaledFloat value_from_count(const BigCount& c, ScaledFloat /*tag*/) { return to_scaled(c); }
inline BigCount value_from_small(long long v, BigCount /*tag*/) { return BigCount(v); }
inline ScaledFloat value_from_small(long long v, ScaledFloat /*tag*/) {
    return ScaledFloat::from_integer(static_cast<std::uint64_t>(v));
}

}  // namespace detail

template <typename Value, typename Visit>
void assoc_stirling_row_sweep_as(int r, long long n_max, Visit&& visit, long long k_cap) {
    if (r < 1) {
        throw std::invalid_argument("assoc_stirling_row_sweep: r must be >= 1");
    }
    std::vector<std::vector<Value>> ring(static_cast<std::size_t>(r));
    BigCount choose_prev = r == 1 ? 1 : 0;  // C(n-1, r-1), maintained incrementally
    for (long long n = 0; n <= n_max; ++n) {
        long long width = n / r;
        if (k_cap >= 0 && width > k_cap) {
            width = k_cap;
        }
        std::vector<Value> row(static_cast<std::size_t>(width) + 1);
        if (n == 0) {
            row[0] = detail::value_from_small(1, Value{});
        } else {
            const auto& above = ring[static_cast<std::size_t>((n - 1) % r)];  // row n-1
            const auto& back = ring[static_cast<std::size_t>(n % r)];         // row n-r
            Value choose = detail::value_from_count(choose_prev, Value{});
            for (long long k = 1; k <= width; ++k) {
                Value stay{};
                if (static_cast<std::size_t>(k) < above.size()) {
                    stay = above[static_cast<std::size_t>(k)] *
                           detail::value_from_small(k, Value{});
                }
                Value fresh{};
                if (n >= r && static_cast<std::size_t>(k - 1) < back.size()) {
                    fresh = back[static_cast<std::size_t>(k - 1)] * choose;
                }
                row[static_cast<std::size_t>(k)] = stay + fresh;
            }
        }
        if (!visit(n, std::span<const Value>(row))) {
            return;
        }
        ring[static_cast<std::size_t>(n % r)] = std::move(row);
        // advance C(n-1, r-1) -> C(n, r-1)
        long long t = n + 1 - 1;  // row index whose binomial the next pass reads
        long long j = r - 1;
        if (t == j) {
            choose_prev = 1;
        } else if (t > j) {
            choose_prev = choose_prev * t / (t - j);
        }
    }
}

}  // namespace sbp
