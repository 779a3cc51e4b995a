#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace snakes {

struct VerifyOptions {
    int n_min = 2;
    int n_max = 14;
    int omega_max = 1;
    int ouroboros_n_max = 14;   // ouroboros checks run only up to this n
    bool scroll_checks = true;
    bool ouroboros_checks = true;
    bool allow_large = false;   // lift the n <= 20 guard
    unsigned threads = 0;       // 0: hardware concurrency, capped by SNAKE_SCROLL_THREADS
    double budget_seconds = 0;  // 0: no budget
};

enum class CheckKind { Theorem, Disputed, Informational };

struct CheckTally {
    std::string name;
    CheckKind kind = CheckKind::Theorem;
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::vector<std::string> counterexamples;  // at most a handful, in item order
};

struct VerifyResult {
    VerifyOptions options;
    std::vector<CheckTally> checks;
    std::int64_t orbits = 0;
    std::int64_t skipped = 0;
    bool complete = true;
    std::map<int, std::set<int>> sum_periods;  // achieved sum-vector periods per n

    const CheckTally& check(const std::string& name) const;
    // Violations of theorem checks; disputed and informational checks do not count.
    std::int64_t violations() const;
    bool ok() const { return complete && violations() == 0; }
};

// Throws InputError when the range is malformed or exceeds the guard.
VerifyResult verify(const VerifyOptions& options);

std::string verify_text(const VerifyResult& r);
nlohmann::json verify_json(const VerifyResult& r);

struct RoundTripResult {
    std::int64_t pairs = 0;
    std::int64_t mismatches = 0;
    std::vector<std::string> counterexamples;
};

// Every feasible pair up to n_max through construct_first_row and back.
RoundTripResult round_trip_pairs(int n_max);

struct TapeSetResult {
    std::int64_t sizes_checked = 0;
    std::int64_t mismatches = 0;
    std::vector<std::string> counterexamples;
};

// Canonical tapes of simulated orbits against the classification, per n.
TapeSetResult compare_tape_sets(int n_max);

} // namespace snakes
