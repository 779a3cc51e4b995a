#pragma once

#include <cstdint>
#include <vector>

#include "snakes/classification.hpp"
#include "snakes/orbit_tables.hpp"

namespace snakes {

struct SumVector {
    std::vector<std::int64_t> sums;
    int lambda = 0;  // least cyclic period, a divisor of n
};

// Least d dividing the length with the vector invariant under shift by d.
int cyclic_period(const std::vector<std::int64_t>& v);

SumVector sum_vector(const OrbitTable& t);

struct ColScaleValue {
    int value = 0;  // in 0..n-1
};

// beta_D + 2 beta_E, checked against n - alpha_S - 2 alpha_L and the scale mod n.
ColScaleValue col_scale(const Scroll& s);

struct PeriodChecks {
    bool odd = false;
    bool divides = false;      // lambda | gcd(n, ColScale)
    bool four_lambda = false;  // lambda > 1 implies n >= 4 lambda
    bool all() const noexcept { return odd && divides && four_lambda; }
};

PeriodChecks period_checks(int lambda, int n, int col_scale);

// Column histogram of one snake's entries in the table.
std::vector<std::int64_t> snake_column_contribution(const OrbitTable& t, const SnakePartition& part, int snake);

// The pair used for period lambda on n = lambda * k vertices (lambda >= 3).
FeasiblePair period_lambda_pair(int lambda, int k);

struct PeriodConstruction {
    int lambda = 0;
    int k = 0;
    int n = 0;
    FeasiblePair pair;
    IndependentSet first_row;
    SumVector sums;
    // Contribution of the snake through the first live entry.
    std::vector<std::int64_t> snake_contribution;
};

// Builds a scroll whose sum vector has period exactly lambda. Throws
// InputError for bad arguments and TheoremViolation when the period misses.
PeriodConstruction construct_period_lambda(int lambda, int k);

} // namespace snakes
