#pragma once

#include <cstdint>
#include <vector>

namespace snakes {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Diagonal of the Smith normal form of m: d_1 | d_2 | ... with
// min(rows, cols) entries, all nonnegative.
std::vector<std::int64_t> smith_diagonal(IntMatrix m);

// Invariant factors (d1, d2), d1 | d2, of Z^2 modulo the row lattice of a
// relation matrix with two columns. A zero means an infinite cyclic factor.
struct GroupInvariants {
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    std::int64_t order() const noexcept { return d1 * d2; }
    friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

GroupInvariants invariants_of_relations(const IntMatrix& rows);

// Z_a x Z_b in invariant-factor form (gcd, lcm).
GroupInvariants cyclic_product(std::int64_t a, std::int64_t b);

} // namespace snakes
