#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sbp {

struct VerifyOptions {
    long long max_m = 8;
    long long max_n = 12;
    std::uint64_t mc_trials = 20'000;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::uint64_t enumeration_states = 1'000'000;  // per-instance cap for oracle sweeps
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> messages;  // one per failure (first few kept)
};

struct VerificationReport {
    std::vector<SuiteResult> suites;
    bool ok() const;
    std::uint64_t total_checks() const;
    std::uint64_t total_failures() const;
};

// Cross-method equality, oracle equivalence, normalization identities and
// seeded Monte Carlo agreement, over an m <= max_m, n <= max_n grid.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace sbp
