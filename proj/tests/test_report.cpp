#include "doctest.h"

#include <string>

#include "snakes/errors.hpp"
#include "snakes/render.hpp"
#include "snakes/report.hpp"
#include "snakes/verify.hpp"

using namespace snakes;

namespace {

const char* const kSeeds[] = {"00001010000", "101010001010", "00", "0000", "000100", "1000100010010",
                              "100000010100100000100000", "10100"};

std::size_t count(const std::string& s, const std::string& needle)
{
    std::size_t k = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1))
        ++k;
    return k;
}

} // namespace

TEST_CASE("orbit reports survive a JSON round trip")
{
    for (const char* seed : kSeeds)
        for (int omega : {1, 2, 3}) {
            INFO(seed, " omega ", omega);
            const OrbitReport r = build_orbit_report(IndependentSet(seed), omega);
            const std::string text = nlohmann::json(r).dump();
            const OrbitReport back = nlohmann::json::parse(text).get<OrbitReport>();
            CHECK(back == r);
            CHECK(nlohmann::json(back).dump() == text);
        }
}

TEST_CASE("agreement flags hold on the shipped examples")
{
    for (const char* seed : kSeeds)
        for (int omega = 1; omega <= 4; ++omega) {
            INFO(seed, " omega ", omega);
            const OrbitReport r = build_orbit_report(IndependentSet(seed), omega);
            CHECK(r.consistent);
            for (const auto& [name, ok] : r.agreement) {
                INFO(name);
                CHECK(ok);
            }
        }
}

TEST_CASE("report JSON uses the documented field names")
{
    const nlohmann::json j = build_orbit_report(IndependentSet("00001010000"), 1);
    for (const char* key : {"n", "omega", "r", "eta", "barAlpha", "barBeta", "degP", "codegP", "swallowCycles",
                            "coSwallowCycles", "invariantFactors", "colorPreserving"})
        CHECK(j.at("table").contains(key));
    for (const char* key : {"n", "sumVector", "lambda", "colScale", "checks"})
        CHECK(j.at("sums").contains(key));
    CHECK(j.at("sums").at("checks").contains("fourLambda"));
    CHECK(j.at("table").at("invariantFactors") == nlohmann::json::array({1, 22}));
}

TEST_CASE("scroll window export")
{
    const Scroll s = scroll_from_seed(IndependentSet("00001010000"));
    const nlohmann::json j = scroll_window_json(s, 2);
    CHECK(j.at("rows") == nlohmann::json::array({"00001010000", "10100001010"}));
    CHECK(j.at("liveEntries").size() == 6);
    CHECK(j.at("liveEntries")[0] == nlohmann::json::array({0, 5}));
}

TEST_CASE("ascii rendering letters every live entry in both panels")
{
    const Scroll s = scroll_from_seed(IndependentSet("00001010000"));
    const SnakePartition part = snakes_and_cosnakes(s);
    const std::string plain = render_scroll_ascii(s, part, 7, false);
    CHECK(count(plain, "\n") == 7);
    CHECK(plain.find("\033[") == std::string::npos);
    std::size_t snakes = 0, cosnakes = 0;
    for (char ch : plain) {
        snakes += ch >= 'A' && ch <= 'Z';
        cosnakes += ch >= 'a' && ch <= 'z';
    }
    // 22 live entries in one orbit, lettered once per panel.
    CHECK(snakes == 22);
    CHECK(cosnakes == 22);
    CHECK(render_scroll_ascii(s, part, 7, true).find("\033[1;") != std::string::npos);
}

TEST_CASE("svg rendering draws one node per cell and two edges per live entry")
{
    const Scroll s = scroll_from_seed(IndependentSet("00001010000"));
    const SnakePartition part = snakes_and_cosnakes(s);
    const std::string svg = render_scroll_svg(s, part, 7);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "<circle") == 77);
    CHECK(count(svg, "r=\"6\"") == 22);
    // Dashed co-successor edges, clipped at the bottom of the window.
    CHECK(count(svg, "stroke-dasharray") > 0);
    CHECK(count(svg, "<polygon") > 0);
    // Every split edge leaves a re-entry marker.
    CHECK(count(svg, "<path") > 0);
}

TEST_CASE("classification table and csv")
{
    const Classification c = enumerate_ticker_tapes(13);
    const std::string text = classification_text(c);
    CHECK(count(text, "\n") == 19);
    CHECK(text.find("7 quadruples (generating function 7), 17 ticker tapes") != std::string::npos);
    const std::string csv = classification_csv(c);
    CHECK(count(csv, "\n") == 18);
    const nlohmann::json j = classification_json(c);
    CHECK(j.at("counts").at("tapes") == 17);
    CHECK(j.at("counts").at("quadruples") == 7);
    CHECK(j.at("quadruples").size() == 7);
}

TEST_CASE("verification harness over a small range")
{
    VerifyOptions opt;
    opt.n_max = 9;
    opt.omega_max = 3;
    opt.threads = 3;
    const VerifyResult r = verify(opt);
    CHECK(r.complete);
    CHECK(r.violations() == 0);
    CHECK(r.check("commutation").passed > 0);
    CHECK(r.check("ouroboros counts = prediction").failed == 0);

    // Same tallies and counterexamples single-threaded.
    opt.threads = 1;
    const VerifyResult one = verify(opt);
    CHECK(verify_json(one) == verify_json(r));
}

TEST_CASE("verification harness guards")
{
    VerifyOptions opt;
    opt.n_max = 21;
    CHECK_THROWS_AS(verify(opt), InputError);
    opt.n_min = 5;
    opt.n_max = 4;
    CHECK_THROWS_AS(verify(opt), InputError);
    opt.n_min = 2;
    opt.n_max = 2;
    const VerifyResult r = verify(opt);
    CHECK(r.orbits == 1);
    CHECK(r.ok());
}

TEST_CASE("round trips and tape sets")
{
    CHECK(round_trip_pairs(12).mismatches == 0);
    CHECK(compare_tape_sets(10).mismatches == 0);
}
