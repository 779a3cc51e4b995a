#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snakes/abelian.hpp"
#include "snakes/scroll_engine.hpp"
#include "snakes/slither_calculus.hpp"

namespace snakes {

// The first r = omega * m rows of the scroll, glued into a torus.
class OrbitTable {
public:
    OrbitTable(const Scroll& scroll, int omega);

    const Scroll& scroll() const noexcept { return scroll_; }
    int n() const noexcept { return scroll_.n(); }
    int omega() const noexcept { return omega_; }
    std::int64_t r() const noexcept { return r_; }
    std::int64_t size() const noexcept { return r_ * n(); }  // r*n cells
    std::int64_t eta() const noexcept { return static_cast<std::int64_t>(live_.size()); }
    const std::vector<TapeIndex>& live() const noexcept { return live_; }

    bool at(std::int64_t row, int col) const noexcept;
    // Representative of k in [1, r*n].
    TapeIndex reduce(TapeIndex k) const noexcept;
    // Position of a live k in live(), after reduction; -1 when dead.
    long position(TapeIndex k) const;

    TapeIndex s_bar(TapeIndex k) const;
    TapeIndex c_bar(TapeIndex k) const;
    std::vector<std::string> rows() const;

private:
    Scroll scroll_;
    int omega_;
    std::int64_t r_;
    std::vector<TapeIndex> live_;
};

OrbitTable omega_table(const Scroll& s, int omega);

struct OuroborosPartition {
    std::vector<int> ouro_label;     // parallel to OrbitTable::live()
    std::vector<int> co_ouro_label;
    int bar_alpha = 0;
    int bar_beta = 0;
};

OuroborosPartition ouroboros_partition(const OrbitTable& t);

struct FundamentalDegrees {
    std::int64_t deg_p1 = 0;
    std::int64_t codeg_p1 = 0;
};

// (alpha / bar_alpha_1, beta / bar_beta_1); ConsistencyError if not integral.
FundamentalDegrees fundamental_degrees(const Scroll& s);

struct OuroborosCounts {
    std::int64_t bar_alpha = 0;
    std::int64_t bar_beta = 0;
    friend bool operator==(const OuroborosCounts&, const OuroborosCounts&) = default;
};

// Counts for frequency omega from the frequency-1 counts and fundamental degrees.
OuroborosCounts predicted_counts(const Scroll& s, int omega);

// A permutation of snake (or co-snake) positions in their cyclic order.
struct SwallowPermutation {
    std::vector<int> image;          // image[i] = position of the label i is sent to
    std::vector<TapeIndex> tails;    // least index of each ordered label in the table
    std::vector<TapeIndex> heads;    // greatest index of each ordered label in the table
    int shift = 0;
    bool uniform = false;
    std::vector<std::vector<int>> cycles;
    bool identity() const noexcept { return uniform && shift == 0; }
};

// Snakes ordered by the co-successor starting from the snake holding the
// least live index of the table; co-snakes ordered by the successor.
SwallowPermutation swallow(const OrbitTable& t, const SnakePartition& part);
SwallowPermutation co_swallow(const OrbitTable& t, const SnakePartition& part);

// From the relations s^beta = c^alpha, s^(eta/bar_alpha) = c^(eta/bar_beta) = 1.
GroupInvariants group_invariants(const OrbitTable& t, const OuroborosPartition& op, int alpha, int beta);

struct SimulatedGroup {
    GroupInvariants invariants;
    std::int64_t s_order = 0;  // length of the s-bar cycle through the base point
    std::int64_t c_step = 0;   // least b > 0 with c-bar^b(x) on the ouroboros of x
    std::int64_t offset = 0;   // a with s-bar^a c-bar^b (x) = x
    bool simply_transitive = false;
};

// Lattice of exponent pairs fixing the first live entry, found by walking.
SimulatedGroup simulated_group(const OrbitTable& t, const OuroborosPartition& op);

Slither table_slither(const OrbitTable& t, const OuroborosPartition& op);
CoSlither table_coslither(const OrbitTable& t, const OuroborosPartition& op);

struct ColorPreserving {
    bool counts_match = false;        // bar_alpha = alpha and bar_beta = beta
    bool swallows_identity = false;
    bool labels_bijective = false;    // each (co-)ouroboros holds one (co-)snake
    bool scale_divides = false;       // sigma | r*n
    bool degrees_divide = false;      // deg(p1) * codeg(p1) | omega
    bool agree() const noexcept;
    bool value() const noexcept { return counts_match; }
};

// Evaluates all five conditions; TheoremViolation if they disagree.
ColorPreserving is_color_preserving(const Scroll& s, int omega);
ColorPreserving color_conditions(const OrbitTable& t, const SnakePartition& part, const OuroborosPartition& op,
                                 const SwallowPermutation& sw, const SwallowPermutation& csw,
                                 const FundamentalDegrees& fd);

} // namespace snakes
