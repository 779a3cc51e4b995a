#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snakes/core_dynamics.hpp"
#include "snakes/scroll_engine.hpp"

namespace snakes {

// Cyclic word over {D, E}.
class Slither {
public:
    explicit Slither(std::string word);
    const std::string& word() const noexcept { return word_; }
    int length() const noexcept { return static_cast<int>(word_.size()); }
    int beta_D() const noexcept { return d_; }
    int beta_E() const noexcept { return length() - d_; }
    std::string canonical() const;
    friend bool operator==(const Slither&, const Slither&) = default;

private:
    std::string word_;
    int d_;
};

// Cyclic word over {S, L}.
class CoSlither {
public:
    explicit CoSlither(std::string word);
    const std::string& word() const noexcept { return word_; }
    int length() const noexcept { return static_cast<int>(word_.size()); }
    int alpha_S() const noexcept { return s_; }
    int alpha_L() const noexcept { return length() - s_; }
    std::string canonical() const;
    friend bool operator==(const CoSlither&, const CoSlither&) = default;

private:
    std::string word_;
    int s_;
};

struct ZeroBlock {
    int start = 0;  // column of the first zero
    int length = 0;
};

struct ZeroBlocks {
    std::vector<ZeroBlock> inner;
    ZeroBlock trailing;
};

// The row the extraction formulas read: the length-n stretch of the tape
// that starts at the first live entry of `row`. Equal to `row` when v_1 = 1.
IndependentSet analysis_row(const IndependentSet& row);

ZeroBlocks zero_blocks(const IndependentSet& row);
Slither slither_from_row(const IndependentSet& row);
CoSlither coslither_from_row(const IndependentSet& row);

int degree(const Slither& w);
int codegree(const CoSlither& w);
std::string primitive_block(const std::string& w);

struct ScrollMetrics {
    std::int64_t deg = 0;
    std::int64_t codeg = 0;
    std::int64_t p = 0;      // snake scale
    std::int64_t q = 0;      // co-snake scale
    std::int64_t sigma = 0;  // scale
    std::int64_t T_tape = 0;
    std::int64_t T_scroll = 0;
    friend bool operator==(const ScrollMetrics&, const ScrollMetrics&) = default;
};

// Closed forms only. Throws ConsistencyError when the slither and
// co-slither expressions for the scale disagree or degrees do not divide it.
ScrollMetrics metrics_from_words(const Slither& ws, const CoSlither& wc, int n);

// Closed forms on the scroll's own words, checked against the simulated
// orbit length (TheoremViolation on mismatch).
ScrollMetrics metrics(const Scroll& s);

struct ScrollAnalysis {
    TapeIndex row_start = 0;  // tape index where the analysis row begins
    IndependentSet row;
    Slither slither;
    CoSlither co_slither;
    ScrollMetrics metrics;
    SlitherWalk walk;                  // simulated route from row_start
    std::int64_t simulated_period = 0; // least shift fixing the tape
    std::int64_t orbit_length = 0;
};

ScrollAnalysis analyze(const Scroll& s);

} // namespace snakes
