#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "snakes/classification.hpp"
#include "snakes/cyclic_words.hpp"
#include "snakes/errors.hpp"

using namespace snakes;

namespace {

// Oracle: count solutions by a direct triple loop.
int brute_quadruples(int n)
{
    int count = 0;
    for (int e = 0; e <= n + 1; ++e)
        for (int s = 0; s <= n + 1; ++s)
            for (int l = 0; l <= n + 1; ++l)
                if (s + l > 0 && 2 * e + 3 * s + 4 * l == n + 1)
                    ++count;
    return count;
}

// Oracle: canonical forms of every word with the given letter counts.
std::set<std::string> brute_necklaces(char a, int ca, char b, int cb)
{
    std::set<std::string> out;
    const int len = ca + cb;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        if (__builtin_popcount(mask) != cb)
            continue;
        std::string w;
        for (int i = 0; i < len; ++i)
            w.push_back((mask >> i) & 1u ? b : a);
        out.insert(cyclic::canonical(w));
    }
    return out;
}

} // namespace

TEST_CASE("feasible quadruples")
{
    const auto q13 = feasible_quadruples(13);
    CHECK(q13.size() == 7);
    CHECK(std::find(q13.begin(), q13.end(), FeasibleQuadruple{5, 0, 1, 1}) != q13.end());
    CHECK(std::find(q13.begin(), q13.end(), FeasibleQuadruple{0, 2, 2, 7}) != q13.end());
    const auto q24 = feasible_quadruples(24);
    CHECK(std::find(q24.begin(), q24.end(), FeasibleQuadruple{6, 3, 1, 7}) != q24.end());
    CHECK(feasible_quadruples(4) == std::vector<FeasibleQuadruple>{{1, 1, 0, 1}});
    for (int n = 2; n <= 60; ++n)
        for (const auto& q : feasible_quadruples(n))
            REQUIRE(is_feasible(q, n));
}

TEST_CASE("quadruples follow the order of the n = 13 table")
{
    const std::vector<FeasibleQuadruple> expect{{5, 0, 1, 1}, {3, 0, 2, 3}, {1, 0, 3, 5}, {4, 2, 0, 3},
                                                {2, 2, 1, 5}, {0, 2, 2, 7}, {1, 4, 0, 7}};
    CHECK(feasible_quadruples(13) == expect);
}

TEST_CASE("generating function count")
{
    CHECK(gf_count(13) == 7);
    CHECK(gf_count(2) == 1);
    CHECK(gf_count(24) == static_cast<std::int64_t>(feasible_quadruples(24).size()));
    for (int n = 2; n <= 80; ++n) {
        REQUIRE(gf_count(n) == brute_quadruples(n));
        REQUIRE(gf_count(n) == static_cast<std::int64_t>(feasible_quadruples(n).size()));
        REQUIRE(gf_count(n) > 0);
    }
}

TEST_CASE("necklaces agree with the exhaustive oracle and with Burnside")
{
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            if (a + b == 0)
                continue;
            const auto got = necklaces('D', a, 'E', b);
            const auto want = brute_necklaces('D', a, 'E', b);
            REQUIRE(std::set<std::string>(got.begin(), got.end()) == want);
            REQUIRE(got.size() == want.size());
            REQUIRE(necklace_count(a, b) == static_cast<std::int64_t>(got.size()));
        }
    CHECK(necklaces('S', 2, 'L', 2) == std::vector<std::string>{"SSLL", "SLSL"});
}

TEST_CASE("construct first row examples")
{
    CHECK(construct_first_row({Slither("DEEDEDDDEDDEE"), CoSlither("SLSS")}, 24).str() ==
          "100000010100100000100000");
    const FirstRow r11 = construct_first_row_detailed({Slither("EDEDED"), CoSlither("SS")}, 11);
    CHECK(r11.row.str() == "10100001010");
    CHECK(r11.rotation == 0);
    CHECK(construct_first_row({Slither("ED"), CoSlither("L")}, 5).str() == "10100");
    CHECK(construct_first_row({Slither("DEDEDE"), CoSlither("SS")}, 11).str() == "10000101000");
}

TEST_CASE("construct first row rejects bad input")
{
    CHECK_THROWS_AS(construct_first_row({Slither("DE"), CoSlither("L")}, 6), InputError);
    CHECK_THROWS_AS(construct_first_row({Slither("DD"), CoSlither("S")}, 4), InputError);
}

TEST_CASE("round trip over every feasible pair up to n = 16")
{
    for (int n = 2; n <= 16; ++n)
        for (const auto& q : feasible_quadruples(n))
            for (const auto& ws : necklaces('D', q.beta_D, 'E', q.beta_E))
                for (const auto& wc : necklaces('S', q.alpha_S, 'L', q.alpha_L)) {
                    // Try every rotation of both words, not just canonical ones.
                    for (std::size_t d = 0; d < ws.size(); ++d) {
                        const std::string wsr = cyclic::rotate_left(ws, d);
                        const std::string wcr = cyclic::rotate_left(wc, d % wc.size());
                        const FirstRow fr = construct_first_row_detailed({Slither(wsr), CoSlither(wcr)}, n);
                        REQUIRE(fr.rotation == 0);
                        REQUIRE(fr.row.at(1));
                        REQUIRE(cyclic::is_rotation(slither_from_row(fr.row).word(), ws));
                        REQUIRE(cyclic::is_rotation(coslither_from_row(fr.row).word(), wc));
                    }
                }
}

TEST_CASE("n = 13 classification matches the reference table")
{
    // Rows of the table: beta_E, alpha_S, alpha_L, beta_D, slither, co-slither.
    const std::multiset<std::pair<std::string, std::string>> table{
        {"EEEEED", "L"},     {"EEEDDD", "LL"},     {"EEDEDD", "LL"},     {"EEDDED", "LL"},
        {"EDEDED", "LL"},    {"EDDDDD", "LLL"},    {"EEEEDDD", "SS"},    {"EEEDEDD", "SS"},
        {"EEEDDED", "SS"},   {"EEDEEDD", "SS"},    {"EEDEDED", "SS"},    {"EEDDDDD", "SSL"},
        {"EDEDDDD", "SSL"},  {"EDDEDDD", "SSL"},   {"DDDDDDD", "SSLL"},  {"DDDDDDD", "SLSL"},
        {"EDDDDDDD", "SSSS"}};
    std::multiset<std::pair<std::string, std::string>> want;
    for (const auto& [ws, wc] : table)
        want.insert({cyclic::canonical(ws), cyclic::canonical(wc)});

    const Classification c = enumerate_ticker_tapes(13);
    CHECK(c.necklace_pairs == 17);
    CHECK(c.distinct_tapes == 17);
    std::multiset<std::pair<std::string, std::string>> got;
    for (const auto& t : c.tapes)
        got.insert({t.slither, t.co_slither});
    CHECK(got == want);

    for (const auto& s : c.quadruples)
        if (s.quadruple == FeasibleQuadruple{3, 0, 2, 3}) {
            std::set<std::string> ws(s.slither_necklaces.begin(), s.slither_necklaces.end());
            std::set<std::string> expect;
            for (const char* w : {"EEEDDD", "EEDEDD", "EEDDED", "EDEDED"})
                expect.insert(cyclic::canonical(w));
            CHECK(ws == expect);
            CHECK(s.co_slither_necklaces == std::vector<std::string>{"LL"});
        }
}

TEST_CASE("simulated orbits realize exactly the classified tapes")
{
    for (int n = 2; n <= 12; ++n) {
        std::set<std::string> classified;
        for (const auto& t : enumerate_ticker_tapes(n).tapes)
            classified.insert(t.tape_canonical);
        std::set<std::string> simulated;
        for (const auto& o : all_orbits(n)) {
            const Scroll s(o);
            simulated.insert(s.tape().canonical());
            // Every simulated word pair is feasible.
            const ScrollAnalysis a = analyze(s);
            REQUIRE(is_feasible(FeasiblePair{a.slither, a.co_slither}.quadruple(), n));
        }
        REQUIRE(simulated == classified);
    }
}

TEST_CASE("tape canonical form ignores where the tape is cut")
{
    const Scroll s = scroll_from_seed(IndependentSet("00001010000"));
    for (TapeIndex start = 1; start <= 30; ++start) {
        std::vector<std::uint8_t> bits;
        for (TapeIndex k = start; k < start + 11; ++k)
            bits.push_back(s.at(k));
        REQUIRE(tape_canonical_of(IndependentSet(bits)) == s.tape().canonical());
    }
}
