#include "sbp/solver.hpp"

#include "sbp/formula.hpp"
#include "sbp/parallel.hpp"

#include <cassert>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace sbp {

namespace {

// Above this many days the automatic policy switches from the end-to-end
// exact scan to the scaled scan with boundary certification.
constexpr long long kExactPolicyMaxDays = 100;

void check_query(const ThresholdQuery& q) {
    if (q.days < 1) {
        throw std::invalid_argument("min_people: m must be >= 1");
    }
    if (q.min_occupancy < 2) {
        throw std::invalid_argument("min_people: r must be >= 2");
    }
    if (q.threshold <= 0 || q.threshold >= 1) {
        throw std::invalid_argument(
            "min_people: threshold must lie strictly between 0 and 1");
    }
    if (q.scan_cap < 0) {
        throw std::invalid_argument("min_people: negative scan cap");
    }
}

long long effective_cap(const ThresholdQuery& q) {
    return q.scan_cap > 0 ? q.scan_cap : 32 * q.days * q.min_occupancy;
}

// Exact probability by an independent route where one exists: the
// inclusion-exclusion formula covers r = 2; larger r uses the exact
// Stirling path.
ExactRational exact_prob(long long m, long long n, int r) {
    if (r == 2) {
        return prob_strong_birthday_formula(m, n);
    }
    return prob_shared_at_least({.days = m, .people = n, .min_occupancy = r});
}

enum class Side { below, above, ambiguous };

// Compares a scaled probability against the scaled threshold. Ambiguous
// whenever the gap could be explained by the tracked rounding error
// (10 * ops * eps relative) or falls under the absolute 1e-12 floor.
Side classify(const ScaledFloat& value, const ScaledFloat& threshold) {
    std::int64_t shift = threshold.exponent();
    if (!value.is_zero() && value.exponent() > shift) {
        shift = value.exponent();
    }
    auto rebase = [shift](const ScaledFloat& x) -> double {
        if (x.is_zero()) {
            return 0.0;
        }
        std::int64_t d = x.exponent() - shift;
        if (d < -1074) {
            return 0.0;
        }
        return std::ldexp(x.mantissa(), static_cast<int>(d));
    };
    double v = rebase(value);
    double t = rebase(threshold);
    double gap = std::fabs(v - t);
    double ops = static_cast<double>(value.op_count() + threshold.op_count() + 1);
    double band = 10.0 * ops * ScaledFloat::kUnitRoundoff * v;
    double floor_band;
    if (shift < -1020) {
        floor_band = std::numeric_limits<double>::infinity();
    } else if (shift > 1020) {
        floor_band = 0.0;
    } else {
        floor_band = 1e-12 * std::ldexp(1.0, static_cast<int>(-shift));
    }
    if (gap <= std::max(band, floor_band)) {
        return Side::ambiguous;
    }
    return v >= t ? Side::above : Side::below;
}

SolverResult exact_scan(const ThresholdQuery& q) {
    const long long cap = effective_cap(q);
    std::optional<SolverResult> found;
    ExactRational prev;
    long long scanned = 0;
    prob_sweep(q.days, q.min_occupancy, cap, NumberMode::exact,
               [&](const ProbSweepRow& row) {
                   if (row.people == 0) {
                       return true;  // the scan starts at one person
                   }
                   ++scanned;
                   const ExactRational& p = row.exact();
                   if (rational_cmp(p, q.threshold) != std::strong_ordering::less) {
                       SolverResult r;
                       r.n_min = row.people;
                       r.prob_below = prev;
                       r.prob_at = p;
                       r.certification = Certification::exact;
                       r.rows_scanned = scanned;
                       found = std::move(r);
                       return false;
                   }
                   prev = p;
                   return true;
               });
    if (!found) {
        throw ResourceLimitError("min_people: scan cap " + std::to_string(cap) +
                                 " reached without crossing the threshold");
    }
    return *found;
}

SolverResult scaled_scan(const ThresholdQuery& q) {
    const long long cap = effective_cap(q);
    const ScaledFloat threshold = to_scaled(q.threshold);
    std::optional<SolverResult> found;
    long long scanned = 0;

    ScaledFloat prev_scaled;
    std::optional<ExactRational> prev_exact;  // set when n-1 needed exact resolution

    prob_sweep(q.days, q.min_occupancy, cap, NumberMode::scaled,
               [&](const ProbSweepRow& row) {
                   if (row.people == 0) {
                       return true;
                   }
                   ++scanned;
                   const long long n = row.people;
                   const ScaledFloat& value = row.scaled();
                   Side side = classify(value, threshold);

                   if (side == Side::ambiguous) {
                       ExactRational at = exact_prob(q.days, n, q.min_occupancy);
                       if (rational_cmp(at, q.threshold) == std::strong_ordering::less) {
                           prev_scaled = value;
                           prev_exact = std::move(at);
                           return true;
                       }
                       ExactRational below = prev_exact
                                                 ? *prev_exact
                                                 : exact_prob(q.days, n - 1, q.min_occupancy);
                       assert(rational_cmp(below, q.threshold) == std::strong_ordering::less);
                       SolverResult r;
                       r.n_min = n;
                       r.prob_below = std::move(below);
                       r.prob_at = std::move(at);
                       r.certification = Certification::exact;
                       r.rows_scanned = scanned;
                       found = std::move(r);
                       return false;
                   }

                   if (side == Side::above) {
                       SolverResult r;
                       r.n_min = n;
                       r.rows_scanned = scanned;
                       if (prev_exact) {
                           // the previous row was too close for the fast path;
                           // certify both sides of the boundary exactly
                           r.prob_below = *prev_exact;
                           r.prob_at = exact_prob(q.days, n, q.min_occupancy);
                           assert(rational_cmp(std::get<ExactRational>(r.prob_at),
                                               q.threshold) != std::strong_ordering::less);
                           r.certification = Certification::exact;
                       } else {
                           r.prob_below = prev_scaled;
                           r.prob_at = value;
                           r.certification = Certification::scaled_with_margin;
                       }
                       found = std::move(r);
                       return false;
                   }

                   prev_scaled = value;
                   prev_exact.reset();
                   return true;
               });
    if (!found) {
        throw ResourceLimitError("min_people: scan cap " + std::to_string(cap) +
                                 " reached without crossing the threshold");
    }
    return *found;
}

}  // namespace

const char* to_string(Certification c) {
    switch (c) {
        case Certification::exact:
            return "exact";
        case Certification::scaled_with_margin:
            return "scaled-with-margin";
    }
    return "unknown";
}

SolverResult min_people(const ThresholdQuery& q, SolvePolicy policy) {
    check_query(q);
    if (policy == SolvePolicy::automatic) {
        policy = q.days <= kExactPolicyMaxDays ? SolvePolicy::exact_scan
                                               : SolvePolicy::scaled_scan;
    }
    return policy == SolvePolicy::exact_scan ? exact_scan(q) : scaled_scan(q);
}

std::vector<TableCell> solve_table(const std::vector<long long>& m_list,
                                   const std::vector<ExactRational>& p_list, int r,
                                   int jobs, SolvePolicy policy) {
    if (m_list.empty() || p_list.empty()) {
        throw std::invalid_argument("solve_table: empty m or p list");
    }
    std::vector<TableCell> cells(m_list.size() * p_list.size());
    detail::for_each_index(
        static_cast<std::int64_t>(cells.size()), jobs, [&](std::int64_t i) {
            std::size_t row = static_cast<std::size_t>(i) / m_list.size();
            std::size_t col = static_cast<std::size_t>(i) % m_list.size();
            TableCell& cell = cells[static_cast<std::size_t>(i)];
            cell.days = m_list[col];
            cell.threshold = p_list[row];
            cell.min_occupancy = r;
            cell.result = min_people({.days = cell.days,
                                      .threshold = cell.threshold,
                                      .min_occupancy = r},
                                     policy);
        });
    return cells;
}

}  // namespace sbp
