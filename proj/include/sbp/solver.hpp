#pragma once

#include "sbp/assoc_evaluator.hpp"
#include "sbp/exact_num.hpp"

#include <string>
#include <variant>
#include <vector>

namespace sbp {

// Threshold search: least n with P(m, n, r) >= p.
struct ThresholdQuery {
    long long days = 365;            // m >= 1
    ExactRational threshold;         // p, strictly inside (0, 1)
    int min_occupancy = 2;           // r >= 2
    long long scan_cap = 0;          // 0 -> 32 * m * r
};

enum class Certification {
    exact,               // boundary decided by exact rational comparison
    scaled_with_margin,  // scaled values cleared the threshold by more than
                         // their tracked error band on both sides
};

enum class SolvePolicy {
    automatic,    // exact scan for small m, scaled scan + certification above
    exact_scan,   // exact rational arithmetic end to end
    scaled_scan,  // scaled fast path with exact recomputation only on demand
};

// Probability at one group size, in whichever arithmetic certified it.
using ProbValue = std::variant<ExactRational, ScaledFloat>;

struct SolverResult {
    long long n_min = 0;
    ProbValue prob_below;  // at n_min - 1
    ProbValue prob_at;     // at n_min
    Certification certification = Certification::exact;
    long long rows_scanned = 0;
};

const char* to_string(Certification c);

// First-crossing semantics: a plain upward scan from n = 1, no binary
// search (P is not monotone in n at small n, e.g. P(m,2) = 1/m > P(m,3)).
// Throws ResourceLimitError if the scan cap is hit first.
SolverResult min_people(const ThresholdQuery& q, SolvePolicy policy = SolvePolicy::automatic);

// One solved table cell.
struct TableCell {
    long long days = 0;
    ExactRational threshold;
    int min_occupancy = 2;
    SolverResult result;
};

// Solves every (p, m) pair; cells are distributed over `jobs` workers and
// returned in row-major order (thresholds outer, m inner).
std::vector<TableCell> solve_table(const std::vector<long long>& m_list,
                                   const std::vector<ExactRational>& p_list, int r,
                                   int jobs = 1,
                                   SolvePolicy policy = SolvePolicy::automatic);

}  // namespace sbp
