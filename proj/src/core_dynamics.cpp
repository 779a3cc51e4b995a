#include "snakes/core_dynamics.hpp"

#include <algorithm>

#include "snakes/errors.hpp"

namespace snakes {

CycleSize::CycleSize(int n) : n_(n)
{
    if (n < 2)
        throw InputError("cycle size must be at least 2, got " + std::to_string(n));
}

namespace {

std::vector<std::uint8_t> parse_bits(std::string_view bits)
{
    std::vector<std::uint8_t> out;
    out.reserve(bits.size());
    for (char ch : bits) {
        if (ch != '0' && ch != '1')
            throw InputError("word must consist of 0 and 1, got '" + std::string(bits) + "'");
        out.push_back(ch == '1');
    }
    return out;
}

} // namespace

bool is_independent(const std::vector<std::uint8_t>& bits)
{
    const std::size_t n = bits.size();
    for (std::size_t i = 0; i < n; ++i)
        if (bits[i] && bits[(i + 1) % n])
            return false;
    return true;
}

bool is_independent(std::string_view bits, CycleSize n)
{
    if (static_cast<int>(bits.size()) != n.value())
        throw InputError("word length " + std::to_string(bits.size()) + " does not match n = " +
                         std::to_string(n.value()));
    return is_independent(parse_bits(bits));
}

IndependentSet::IndependentSet(std::string_view bits) : IndependentSet(parse_bits(bits)) {}

IndependentSet::IndependentSet(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
{
    CycleSize check(static_cast<int>(bits_.size()));
    (void)check;
    for (auto& b : bits_)
        b = b ? 1 : 0;
    if (!is_independent(bits_))
        throw InputError("'" + str() + "' has two cyclically adjacent ones");
}

bool IndependentSet::at(long long k) const noexcept
{
    const long long n = size();
    long long r = (k - 1) % n;
    if (r < 0)
        r += n;
    return bits_[static_cast<std::size_t>(r)] != 0;
}

int IndependentSet::popcount() const noexcept
{
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string IndependentSet::str() const
{
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_)
        s.push_back(b ? '1' : '0');
    return s;
}

IndependentSet IndependentSet::rotated(int d) const
{
    const int n = size();
    std::vector<std::uint8_t> out(bits_.size());
    for (int k = 1; k <= n; ++k)
        out[k - 1] = at(k + d);
    return IndependentSet(std::move(out));
}

IndependentSet toggle(const IndependentSet& set, int k)
{
    const int n = set.size();
    if (k < 1 || k > n)
        throw InputError("vertex " + std::to_string(k) + " outside 1.." + std::to_string(n));
    std::vector<std::uint8_t> bits = set.bits();
    if (bits[k - 1])
        bits[k - 1] = 0;
    else if (!set.at(k - 1) && !set.at(k + 1))
        bits[k - 1] = 1;
    return IndependentSet(std::move(bits));
}

IndependentSet sweep(const IndependentSet& set)
{
    // In-place pass: position n sees the already updated v_1.
    std::vector<std::uint8_t> v = set.bits();
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t left = v[(i + n - 1) % n];
        const std::uint8_t right = v[(i + 1) % n];
        v[i] = v[i] ? 0 : static_cast<std::uint8_t>(!left && !right);
    }
    return IndependentSet(std::move(v));
}

Orbit orbit(const IndependentSet& set)
{
    Orbit o;
    o.rows.push_back(set);
    for (IndependentSet x = sweep(set); x != set; x = sweep(x))
        o.rows.push_back(x);
    return o;
}

std::vector<IndependentSet> enumerate_independent_sets(CycleSize n)
{
    const int len = n.value();
    std::vector<IndependentSet> out;
    std::vector<std::uint8_t> word(len, 0);

    // Depth-first with 0 before 1 yields lexicographic order.
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            out.emplace_back(word);
            return;
        }
        word[pos] = 0;
        self(self, pos + 1);
        const bool left_free = pos == 0 || !word[pos - 1];
        const bool wrap_free = pos != len - 1 || !word[0];
        if (left_free && wrap_free) {
            word[pos] = 1;
            self(self, pos + 1);
            word[pos] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Orbit> all_orbits(CycleSize n)
{
    const std::vector<IndependentSet> sets = enumerate_independent_sets(n);
    std::vector<char> seen(sets.size(), 0);
    auto index_of = [&](const IndependentSet& x) {
        auto it = std::lower_bound(sets.begin(), sets.end(), x);
        return static_cast<std::size_t>(it - sets.begin());
    };

    std::vector<Orbit> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (seen[i])
            continue;
        Orbit o = orbit(sets[i]);
        for (const auto& row : o.rows)
            seen[index_of(row)] = 1;
        out.push_back(std::move(o));
    }
    return out;
}

} // namespace snakes
