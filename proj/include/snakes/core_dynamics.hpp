#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace snakes {

// Number of vertices of the cycle graph C_n.
class CycleSize {
public:
    CycleSize(int n);
    int value() const noexcept { return n_; }
    operator int() const noexcept { return n_; }

private:
    int n_;
};

// Independent set of C_n stored as the word v_1..v_n.
// Vertex indices are 1-based at the API; storage is 0-based.
class IndependentSet {
public:
    explicit IndependentSet(std::string_view bits);
    IndependentSet(std::vector<std::uint8_t> bits);

    int size() const noexcept { return static_cast<int>(bits_.size()); }
    // v_k for k in 1..n; indices outside that range wrap cyclically.
    bool at(long long k) const noexcept;
    int popcount() const noexcept;
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    std::string str() const;

    // Cyclic shift left by d places: result v_k = this v_{k+d}.
    IndependentSet rotated(int d) const;

    friend bool operator==(const IndependentSet&, const IndependentSet&) = default;
    friend auto operator<=>(const IndependentSet&, const IndependentSet&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct Orbit {
    std::vector<IndependentSet> rows;

    int n() const { return rows.front().size(); }
    long long m() const { return static_cast<long long>(rows.size()); }
};

bool is_independent(std::string_view bits, CycleSize n);
bool is_independent(const std::vector<std::uint8_t>& bits);

IndependentSet toggle(const IndependentSet& set, int k);
IndependentSet sweep(const IndependentSet& set);
Orbit orbit(const IndependentSet& set);

std::vector<IndependentSet> enumerate_independent_sets(CycleSize n);
std::vector<Orbit> all_orbits(CycleSize n);

// Elementary cellular automaton rule 1: NOR of the neighbourhood.
constexpr int eca1_local(int a, int b, int c) noexcept { return (a | b | c) ? 0 : 1; }

} // namespace snakes
