#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snakes/core_dynamics.hpp"
#include "snakes/slither_calculus.hpp"

namespace snakes {

struct FeasibleQuadruple {
    int beta_E = 0;
    int alpha_S = 0;
    int alpha_L = 0;
    int beta_D = 0;

    friend bool operator==(const FeasibleQuadruple&, const FeasibleQuadruple&) = default;
    friend auto operator<=>(const FeasibleQuadruple&, const FeasibleQuadruple&) = default;
};

bool is_feasible(const FeasibleQuadruple& q, int n) noexcept;

struct FeasiblePair {
    Slither slither;
    CoSlither co_slither;

    FeasibleQuadruple quadruple() const;
};

// All quadruples for n: alpha_S ascending, then beta_E descending.
std::vector<FeasibleQuadruple> feasible_quadruples(CycleSize n);

// Coefficient of x^(n+1) in 1/(1-x^2) * (1/((1-x^3)(1-x^4)) - 1).
std::int64_t gf_count(CycleSize n);

// Binary necklaces with `count_a` copies of a and `count_b` copies of b,
// each given by its canonical rotation, in increasing order.
std::vector<std::string> necklaces(char a, int count_a, char b, int count_b);
// Burnside count of the same set.
std::int64_t necklace_count(int count_a, int count_b);

struct FirstRow {
    IndependentSet row;
    int rotation = 0;  // rotation applied to the slither before tokenizing
};

// Inverts the zero-block calculus. Throws InputError for infeasible words.
FirstRow construct_first_row_detailed(const FeasiblePair& pair, CycleSize n);
IndependentSet construct_first_row(const FeasiblePair& pair, CycleSize n);

struct TickerTapeClass {
    FeasibleQuadruple quadruple;
    std::string slither;      // canonical rotation
    std::string co_slither;   // canonical rotation
    IndependentSet first_row;
    std::string tape_canonical;
};

struct QuadrupleSummary {
    FeasibleQuadruple quadruple;
    std::vector<std::string> slither_necklaces;
    std::vector<std::string> co_slither_necklaces;
};

struct Classification {
    int n = 0;
    std::vector<QuadrupleSummary> quadruples;
    std::vector<TickerTapeClass> tapes;
    std::int64_t necklace_pairs = 0;
    std::int64_t distinct_tapes = 0;
};

// Every ticker tape on n vertices up to shift. Throws TheoremViolation when a
// pair fails to construct or two pairs collapse onto one tape.
Classification enumerate_ticker_tapes(CycleSize n);

// Canonical rotation of the tape grown from one row.
std::string tape_canonical_of(const IndependentSet& row);

} // namespace snakes
