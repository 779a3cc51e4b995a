#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "snakes/core_dynamics.hpp"
#include "snakes/errors.hpp"

using namespace snakes;

namespace {

// Oracle: filter all 2^n words.
std::vector<std::string> brute_independent(int n)
{
    std::vector<std::string> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::string w;
        for (int i = 0; i < n; ++i)
            w.push_back(((mask >> (n - 1 - i)) & 1u) ? '1' : '0');
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (w[i] == '1' && w[(i + 1) % n] == '1')
                ok = false;
        if (ok)
            out.push_back(w);
    }
    return out;
}

// Oracle: sweep through the rule-1 update applied site by site.
std::string eca_sweep(std::string w)
{
    const int n = static_cast<int>(w.size());
    for (int k = 0; k < n; ++k) {
        const int a = w[(k + n - 1) % n] - '0';
        const int b = w[k] - '0';
        const int c = w[(k + 1) % n] - '0';
        w[k] = b ? '0' : static_cast<char>('0' + eca1_local(a, b, c));
    }
    return w;
}

} // namespace

TEST_CASE("is_independent")
{
    CHECK(is_independent("00000000000", 11));
    CHECK(is_independent("00001010000", 11));
    CHECK_FALSE(is_independent("10000000001", 11));
    CHECK_THROWS_AS(is_independent("0101", 5), InputError);
    CHECK_THROWS_AS(is_independent("0201", 4), InputError);
    CHECK_THROWS_AS(IndependentSet("110"), InputError);
    CHECK_THROWS_AS(IndependentSet("1"), InputError);
}

TEST_CASE("toggle examples")
{
    CHECK(toggle(IndependentSet("00000"), 3).str() == "00100");
    CHECK(toggle(IndependentSet("00100"), 2).str() == "00100");
    CHECK(toggle(IndependentSet("00100"), 3).str() == "00000");
    CHECK(toggle(IndependentSet("00001"), 1).str() == "00001");
    CHECK_THROWS_AS(toggle(IndependentSet("00100"), 0), InputError);
    CHECK_THROWS_AS(toggle(IndependentSet("00100"), 6), InputError);
}

TEST_CASE("sweep examples")
{
    CHECK(sweep(IndependentSet("00001010000")).str() == "10100001010");
    CHECK(sweep(IndependentSet("101010001010")).str() == "000001000001");
    CHECK(sweep(IndependentSet("00")).str() == "10");
}

TEST_CASE("sweep equals sequential toggles and the rule-1 pass")
{
    for (int n = 2; n <= 12; ++n) {
        for (const auto& x : enumerate_independent_sets(n)) {
            IndependentSet y = x;
            for (int k = 1; k <= n; ++k)
                y = toggle(y, k);
            REQUIRE(sweep(x) == y);
            REQUIRE(sweep(x).str() == eca_sweep(x.str()));
        }
    }
}

TEST_CASE("orbit examples")
{
    CHECK(orbit(IndependentSet("101010001010")).m() == 15);
    CHECK(orbit(IndependentSet("00001010000")).m() == 7);
    const Orbit o = orbit(IndependentSet("00"));
    REQUIRE(o.m() == 3);
    CHECK(o.rows[0].str() == "00");
    CHECK(o.rows[1].str() == "10");
    CHECK(o.rows[2].str() == "01");
}

TEST_CASE("orbit rows follow sweep and close up minimally")
{
    for (int n = 2; n <= 10; ++n) {
        for (const auto& o : all_orbits(n)) {
            for (long long i = 0; i < o.m(); ++i)
                REQUIRE(sweep(o.rows[i]) == o.rows[(i + 1) % o.m()]);
            std::set<IndependentSet> distinct(o.rows.begin(), o.rows.end());
            REQUIRE(static_cast<long long>(distinct.size()) == o.m());
        }
    }
}

TEST_CASE("enumeration matches the brute-force filter")
{
    for (int n = 2; n <= 16; ++n) {
        std::vector<std::string> got;
        for (const auto& x : enumerate_independent_sets(n))
            got.push_back(x.str());
        REQUIRE(got == brute_independent(n));
    }
    CHECK(enumerate_independent_sets(2).size() == 3);
    CHECK(enumerate_independent_sets(5).size() == 11);
    const auto eleven = enumerate_independent_sets(11);
    CHECK(std::find(eleven.begin(), eleven.end(), IndependentSet("00001010000")) != eleven.end());
    CHECK_THROWS_AS(enumerate_independent_sets(1), InputError);
}

TEST_CASE("all_orbits partitions the independent sets")
{
    for (int n = 2; n <= 16; ++n) {
        std::size_t total = 0;
        std::set<IndependentSet> seen;
        for (const auto& o : all_orbits(n)) {
            total += o.rows.size();
            seen.insert(o.rows.begin(), o.rows.end());
        }
        REQUIRE(total == enumerate_independent_sets(n).size());
        REQUIRE(seen.size() == total);
    }
    const auto two = all_orbits(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].m() == 3);

    auto size_through = [](int n, const std::string& w) {
        for (const auto& o : all_orbits(n))
            for (const auto& r : o.rows)
                if (r.str() == w)
                    return o.m();
        return 0LL;
    };
    CHECK(size_through(12, "101010001010") == 15);
    CHECK(size_through(12, "101000001010") == 5);
}

TEST_CASE("toggles are involutions")
{
    for (int n = 2; n <= 10; ++n)
        for (const auto& x : enumerate_independent_sets(n))
            for (int k = 1; k <= n; ++k)
                REQUIRE(toggle(toggle(x, k), k) == x);
}

TEST_CASE("sweep is a bijection")
{
    for (int n = 2; n <= 14; ++n) {
        const auto sets = enumerate_independent_sets(n);
        std::set<IndependentSet> images;
        for (const auto& x : sets)
            images.insert(sweep(x));
        REQUIRE(images.size() == sets.size());
    }
}

TEST_CASE("rule-1 agreement at every site")
{
    for (int n = 2; n <= 10; ++n) {
        for (const auto& x : enumerate_independent_sets(n)) {
            for (int k = 1; k <= n; ++k) {
                const int expect = x.at(k) ? 0 : eca1_local(x.at(k - 1), x.at(k), x.at(k + 1));
                REQUIRE(toggle(x, k).at(k) == static_cast<bool>(expect));
            }
        }
    }
    CHECK(eca1_local(0, 0, 0) == 1);
    CHECK(eca1_local(1, 0, 0) == 0);
    CHECK(eca1_local(0, 1, 0) == 0);
}

TEST_CASE("orbit partition is invariant under toggling vertex 1 then rotating")
{
    // The tape shifted by one place reads rotate(toggle(x, 1)) as its rows.
    for (int n = 2; n <= 13; ++n) {
        std::map<IndependentSet, std::size_t> owner;
        const auto orbits = all_orbits(n);
        for (std::size_t i = 0; i < orbits.size(); ++i)
            for (const auto& r : orbits[i].rows)
                owner[r] = i;
        for (const auto& o : orbits) {
            std::set<std::size_t> targets;
            for (const auto& r : o.rows)
                targets.insert(owner.at(toggle(r, 1).rotated(1)));
            REQUIRE(targets.size() == 1);
            REQUIRE(orbits[*targets.begin()].m() == o.m());
        }
    }
}

TEST_CASE("plain rotation does not preserve the orbit partition from n = 5")
{
    for (int n = 5; n <= 9; ++n) {
        std::map<IndependentSet, std::size_t> owner;
        const auto orbits = all_orbits(n);
        for (std::size_t i = 0; i < orbits.size(); ++i)
            for (const auto& r : orbits[i].rows)
                owner[r] = i;
        bool preserved = true;
        for (const auto& o : orbits) {
            std::set<std::size_t> targets;
            for (const auto& r : o.rows)
                targets.insert(owner.at(r.rotated(1)));
            preserved = preserved && targets.size() == 1;
        }
        CHECK_FALSE(preserved);
    }
}
