#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snakes/core_dynamics.hpp"

namespace snakes {

using TapeIndex = std::int64_t;

// Scroll position (row, col) with col in 1..n.
struct LiveEntry {
    std::int64_t row = 0;
    int col = 1;
    friend bool operator==(const LiveEntry&, const LiveEntry&) = default;
};

// Position on the universal cover: col is unbounded.
struct UniversalCoordinate {
    std::int64_t row = 0;
    std::int64_t col = 0;
    friend bool operator==(const UniversalCoordinate&, const UniversalCoordinate&) = default;
};

// Tape index k = row*n + col, col in 1..n.
TapeIndex to_index(LiveEntry e, int n) noexcept;
LiveEntry to_entry(TapeIndex k, int n) noexcept;

// Collapse the universal cover onto the scroll, and the inverse for sheet k.
LiveEntry project(UniversalCoordinate u, int n) noexcept;
UniversalCoordinate lift(LiveEntry e, std::int64_t sheet, int n) noexcept;

// Row-major reading of the scroll, stored as one fundamental orbit vector
// of length m*n. X_k = fundamental[(k-1) mod m*n].
class TickerTape {
public:
    TickerTape(int n, std::vector<std::uint8_t> fundamental);

    int n() const noexcept { return n_; }
    std::int64_t length() const noexcept { return static_cast<std::int64_t>(cells_.size()); }
    bool at(TapeIndex k) const noexcept;
    // Least positive shift fixing the tape; divides length().
    std::int64_t period() const noexcept { return period_; }
    const std::vector<std::uint8_t>& fundamental() const noexcept { return cells_; }
    // Least rotation of one period, as a 0/1 string. Equal for shifted tapes.
    std::string canonical() const;
    std::string str() const;

private:
    int n_;
    std::vector<std::uint8_t> cells_;
    std::int64_t period_;
};

class Scroll {
public:
    explicit Scroll(Orbit base);

    int n() const noexcept { return n_; }
    std::int64_t m() const noexcept { return base_.m(); }
    const Orbit& base() const noexcept { return base_; }
    const TickerTape& tape() const noexcept { return tape_; }

    // Any integer row; columns outside 1..n carry into neighbouring rows.
    bool at(std::int64_t row, std::int64_t col) const noexcept;
    bool at(TapeIndex k) const noexcept { return tape_.at(k); }

    std::vector<TapeIndex> live_between(TapeIndex lo, TapeIndex hi) const;
    // First live tape index >= 1. Throws InputError when the orbit is empty.
    TapeIndex first_live() const;

private:
    int n_;
    Orbit base_;
    TickerTape tape_;
};

Scroll scroll_from_seed(const IndependentSet& seed);

// The step types and their tape advances.
enum class Step : char { D = 'D', E = 'E', S = 'S', L = 'L' };
std::int64_t tape_advance(Step step, int n) noexcept;

TapeIndex successor(const Scroll& s, TapeIndex t);
TapeIndex co_successor(const Scroll& s, TapeIndex t);
TapeIndex predecessor(const Scroll& s, TapeIndex t);
TapeIndex co_predecessor(const Scroll& s, TapeIndex t);
Step successor_step(const Scroll& s, TapeIndex t);
Step co_successor_step(const Scroll& s, TapeIndex t);

// Result of walking successors from a live entry until the walk first lands
// on the starting entry's co-snake.
struct SlitherWalk {
    TapeIndex start = 0;
    std::string slither;     // step types taken, length beta
    std::string co_slither;  // co-successor step types from start to the landing point, length alpha
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t sigma = 0;  // tape advance of the walk
};
SlitherWalk walk_slither(const Scroll& s, TapeIndex start);

// Live entries of one length-sigma window, labelled by snake and co-snake.
struct SnakePartition {
    std::int64_t sigma = 0;
    std::vector<TapeIndex> window;         // live residues in [0, sigma), ascending
    std::vector<int> snake_label;          // parallel to window
    std::vector<int> cosnake_label;        // parallel to window
    int alpha = 0;                         // number of snakes
    int beta = 0;                          // number of co-snakes

    // Index into window of the residue of t, or -1 when t is not live.
    long position(TapeIndex t) const;
    int snake_of(TapeIndex t) const;
    int cosnake_of(TapeIndex t) const;
};

SnakePartition snakes_and_cosnakes(const Scroll& s);
SnakePartition snakes_and_cosnakes(const Scroll& s, std::int64_t sigma);

bool same_fiber(TapeIndex a, TapeIndex b, const SnakePartition& part);
// Live members of the fiber of t inside [lo, hi].
std::vector<TapeIndex> fiber(const Scroll& s, TapeIndex t, const SnakePartition& part,
                             TapeIndex lo, TapeIndex hi);

} // namespace snakes
