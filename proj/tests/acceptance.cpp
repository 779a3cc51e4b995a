// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is zero when every criterion matches its expected outcome.
// Criteria on the known-deviation list are expected to fail; each one prints
// its analysis, and a listed criterion that starts passing is reported as
// unexpected so the list gets revisited.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "snakes/classification.hpp"
#include "snakes/cyclic_words.hpp"
#include "snakes/orbit_tables.hpp"
#include "snakes/report.hpp"
#include "snakes/slither_calculus.hpp"
#include "snakes/sum_vectors.hpp"
#include "snakes/verify.hpp"

using namespace snakes;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("mismatch: " + what);
        }
    }
};

template <typename T>
std::string show(const std::vector<T>& v)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    return out.str();
}

Outcome running_example()
{
    Outcome o;
    const IndependentSet seed("00001010000");
    const OrbitReport r = build_orbit_report(seed, 1);
    o.expect(r.orbitLength == 7, "orbit length " + std::to_string(r.orbitLength));
    o.expect(cyclic::is_rotation(r.slither, "EDEDED"), "slither " + r.slither);
    o.expect(cyclic::is_rotation(r.coSlither, "SS"), "co-slither " + r.coSlither);
    o.expect(r.alpha == 2 && r.beta == 6, "alpha, beta");
    o.expect(r.deg == 3 && r.codeg == 2, "deg, codeg");
    o.expect(r.p == 14 && r.q == 21, "p, q");
    o.expect(r.sigma == 42, "sigma");
    o.expect(r.tapePeriod == 7 && r.simulatedTapePeriod == 7, "tape period");
    o.expect(r.sums.colScale == 9, "ColScale");
    o.expect(r.sums.lambda == 1, "sum period");
    o.expect(r.table.barAlpha == 1 && r.table.barBeta == 2, "ouroboros counts");
    o.expect(r.degP1 == 2 && r.codegP1 == 3, "fundamental degrees");
    // Co-snakes labelled c1..c6 by tail column are positions 0..5 here.
    const std::vector<std::vector<int>> coswal{{0, 4, 2}, {1, 5, 3}};
    o.expect(r.table.coSwallowCycles == coswal, "co-swallow cycles");
    o.expect(r.table.invariantFactors == std::vector<std::int64_t>{1, 22}, "group " + show(r.table.invariantFactors));
    o.expect(r.consistent, "report agreement flags");
    return o;
}

Outcome motivating_example()
{
    Outcome o;
    const Scroll s = scroll_from_seed(IndependentSet("101010001010"));
    o.expect(s.m() == 15, "orbit length " + std::to_string(s.m()));
    const auto& v = s.tape().fundamental();
    bool copies = v.size() == 180;
    for (std::size_t i = 45; copies && i < v.size(); ++i)
        copies = v[i] == v[i - 45];
    o.expect(copies, "orbit vector is four copies of its first 45 entries");
    o.expect(s.tape().period() == 45, "tape period " + std::to_string(s.tape().period()));
    const SumVector sv = sum_vector(OrbitTable(s, 1));
    o.expect(sv.sums == std::vector<std::int64_t>{3, 4, 5, 3, 4, 5, 3, 4, 5, 3, 4, 5}, "sum vector " + show(sv.sums));
    o.expect(sv.lambda == 3, "sum period");
    return o;
}

Outcome classification_13()
{
    Outcome o;
    using Row = std::tuple<int, int, int, int, std::string, std::string>;
    const std::vector<Row> table{
        {5, 0, 1, 1, "EEEEED", "L"},    {3, 0, 2, 3, "EEEDDD", "LL"},    {3, 0, 2, 3, "EEDEDD", "LL"},
        {3, 0, 2, 3, "EEDDED", "LL"},   {3, 0, 2, 3, "EDEDED", "LL"},    {1, 0, 3, 5, "EDDDDD", "LLL"},
        {4, 2, 0, 3, "EEEEDDD", "SS"},  {4, 2, 0, 3, "EEEDEDD", "SS"},   {4, 2, 0, 3, "EEEDDED", "SS"},
        {4, 2, 0, 3, "EEDEEDD", "SS"},  {4, 2, 0, 3, "EEDEDED", "SS"},   {2, 2, 1, 5, "EEDDDDD", "SSL"},
        {2, 2, 1, 5, "EDEDDDD", "SSL"}, {2, 2, 1, 5, "EDDEDDD", "SSL"},  {0, 2, 2, 7, "DDDDDDD", "SSLL"},
        {0, 2, 2, 7, "DDDDDDD", "SLSL"}, {1, 4, 0, 7, "EDDDDDDD", "SSSS"}};
    std::multiset<Row> want;
    for (const auto& [e, s, l, d, ws, wc] : table)
        want.insert({e, s, l, d, cyclic::canonical(ws), cyclic::canonical(wc)});

    const Classification c = enumerate_ticker_tapes(13);
    o.expect(c.quadruples.size() == 7, "quadruples " + std::to_string(c.quadruples.size()));
    o.expect(gf_count(13) == 7, "gf_count");
    o.expect(c.distinct_tapes == 17 && c.tapes.size() == 17, "tapes " + std::to_string(c.distinct_tapes));
    std::multiset<Row> got;
    for (const auto& t : c.tapes)
        got.insert({t.quadruple.beta_E, t.quadruple.alpha_S, t.quadruple.alpha_L, t.quadruple.beta_D, t.slither, t.co_slither});
    o.expect(got == want, "table rows");
    return o;
}

void require_clean(Outcome& o, const VerifyResult& r, const std::vector<std::string>& names)
{
    o.expect(r.complete, "harness did not finish");
    for (const auto& name : names) {
        const CheckTally& t = r.check(name);
        o.expect(t.failed == 0 && t.passed > 0,
                 name + ": " + std::to_string(t.failed) + " of " + std::to_string(t.passed + t.failed) + " failed" +
                     (t.counterexamples.empty() ? "" : ", e.g. " + t.counterexamples.front()));
    }
}

Outcome theorem_suite()
{
    Outcome o;
    VerifyOptions opt;
    opt.n_min = 2;
    opt.n_max = 16;
    opt.ouroboros_checks = false;
    opt.threads = 1;
    const VerifyResult r = verify(opt);
    require_clean(o, r,
                  {"local zeros", "exactly one candidate", "commutation", "parallelogram", "torsor",
                   "beta_D = 2(alpha_S+alpha_L)-1", "2beta_E+3alpha_S+4alpha_L = n+1", "gcd(deg, codeg) = 1",
                   "T = gcd(p, q) = simulated", "scroll period = orbit length", "sum period odd",
                   "sum period divides gcd(n, ColScale)", "sum period > 1 implies n >= 4 period", "no exceptions"});
    o.notes.push_back(std::to_string(r.orbits) + " orbits, " + std::to_string(r.violations()) + " violations over " +
                      std::to_string(r.checks.size()) + " checks");
    return o;
}

// Exponent of the group generated by s-bar and c-bar, from cycle lengths.
std::int64_t walked_exponent(const OrbitTable& t)
{
    auto order = [&](TapeIndex (OrbitTable::*step)(TapeIndex) const) {
        const TapeIndex x0 = t.live().front();
        std::int64_t k = 1;
        for (TapeIndex x = (t.*step)(x0); x != x0; x = (t.*step)(x))
            ++k;
        return k;
    };
    return std::lcm(order(&OrbitTable::s_bar), order(&OrbitTable::c_bar));
}

Outcome ouroboros_suite()
{
    Outcome o;
    VerifyOptions opt;
    opt.n_min = 2;
    opt.n_max = 13;
    opt.omega_max = 12;
    opt.scroll_checks = false;
    opt.threads = 1;
    const VerifyResult r = verify(opt);
    require_clean(o, r,
                  {"ouroboros counts = prediction", "swallows are uniform shifts", "color conditions agree",
                   "presented group = walked group", "simply transitive on the table", "no exceptions"});
    const CheckTally& split = r.check("group = Z_barAlpha x Z_(eta/barAlpha)");
    o.expect(split.failed == 0, "group = Z_barAlpha x Z_(eta/barAlpha): " + std::to_string(split.failed) + " of " +
                                    std::to_string(split.passed + split.failed) + " tables differ");
    if (split.failed > 0) {
        const Scroll s = scroll_from_seed(IndependentSet("000100"));
        const OrbitTable t(s, 1);
        const OuroborosPartition op = ouroboros_partition(t);
        o.notes.push_back("counts, swallows, color conditions and the presented group all agree with brute force");
        o.notes.push_back("the group of the table has order eta and quotients Z_barAlpha and Z_barBeta, but the "
                          "extension need not split");
        const std::int64_t e = walked_exponent(t);
        const std::int64_t half = t.eta() / op.bar_alpha;
        o.notes.push_back("n=6 seed 000100 omega=1: eta=" + std::to_string(t.eta()) + ", barAlpha=" +
                          std::to_string(op.bar_alpha) + ", walked exponent " + std::to_string(e) +
                          (e == t.eta() ? ", so the group is cyclic" : "") + "; Z_" + std::to_string(op.bar_alpha) +
                          " x Z_" + std::to_string(half) + " has exponent " +
                          std::to_string(std::lcm(static_cast<std::int64_t>(op.bar_alpha), half)));
        o.notes.push_back("first counterexample: " + split.counterexamples.front());
    }
    return o;
}

Outcome round_trips()
{
    Outcome o;
    const RoundTripResult rt = round_trip_pairs(20);
    o.expect(rt.mismatches == 0 && rt.pairs > 0,
             std::to_string(rt.mismatches) + " round-trip mismatches" +
                 (rt.counterexamples.empty() ? "" : ", e.g. " + rt.counterexamples.front()));
    const TapeSetResult ts = compare_tape_sets(14);
    o.expect(ts.mismatches == 0, std::to_string(ts.mismatches) + " tape-set mismatches" +
                                     (ts.counterexamples.empty() ? "" : ", e.g. " + ts.counterexamples.front()));
    o.notes.push_back(std::to_string(rt.pairs) + " pairs up to n=20, tape sets equal for n=2..14");
    return o;
}

Outcome sum_grid()
{
    Outcome o;
    for (int lambda : {3, 5, 7, 9})
        for (int k : {4, 5, 6, 7}) {
            try {
                const PeriodConstruction c = construct_period_lambda(lambda, k);
                o.expect(c.sums.lambda == lambda && c.n == lambda * k,
                         "(" + std::to_string(lambda) + "," + std::to_string(k) + ") period " +
                             std::to_string(c.sums.lambda));
                if (lambda == 7 && k == 4) {
                    std::vector<std::int64_t> want;
                    for (int rep = 0; rep < 4; ++rep)
                        for (std::int64_t x : {9, 8, 8, 8, 8, 8, 7})
                            want.push_back(x);
                    o.expect(c.sums.sums == want, "(7,4) overall sums " + show(c.sums.sums));
                }
            } catch (const std::exception& e) {
                o.expect(false, "(" + std::to_string(lambda) + "," + std::to_string(k) + "): " + e.what());
            }
        }
    return o;
}

Outcome gf_coherence()
{
    Outcome o;
    for (int n = 2; n <= 40; ++n) {
        const auto q = feasible_quadruples(n);
        o.expect(gf_count(n) == static_cast<std::int64_t>(q.size()),
                 "n=" + std::to_string(n) + ": " + std::to_string(gf_count(n)) + " vs " + std::to_string(q.size()));
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
    bool known_deviation;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "running example n=11", running_example, false},
        {2, "motivating example n=12", motivating_example, false},
        {3, "classification n=13", classification_13, false},
        {4, "theorem suite n=2..16", theorem_suite, false},
        {5, "ouroboros tables n<=13, omega<=12", ouroboros_suite, true},
        {6, "round trips and tape sets", round_trips, false},
        {7, "sum-vector construction grid", sum_grid, false},
        {8, "generating function n<=40", gf_coherence, false},
    };

    int unexpected = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        char line[160];
        std::snprintf(line, sizeof line, "criterion %d  %-4s  %-36s %8.3fs", c.id, o.pass ? "PASS" : "FAIL", c.title,
                      took.count());
        std::cout << line;
        if (!o.pass && c.known_deviation)
            std::cout << "  (known deviation)";
        if (o.pass && c.known_deviation)
            std::cout << "  (listed as a deviation but passed)";
        std::cout << '\n';
        for (const auto& note : o.notes)
            std::cout << "    " << note << '\n';
        if (o.pass == c.known_deviation)
            ++unexpected;
    }
    std::cout << (unexpected == 0 ? "all criteria as expected" : std::to_string(unexpected) + " unexpected result(s)")
              << '\n';
    return unexpected == 0 ? 0 : 1;
}
