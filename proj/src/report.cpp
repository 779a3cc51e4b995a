#include "snakes/report.hpp"

#include <array>

#include "snakes/cyclic_words.hpp"

namespace snakes {

void to_json(nlohmann::json& j, const OrbitReport& v)
{
    j = nlohmann::json{{"n", v.n},
                       {"seed", v.seed},
                       {"rows", v.rows},
                       {"orbitLength", v.orbitLength},
                       {"analysisStart", v.analysisStart},
                       {"analysisRow", v.analysisRow},
                       {"slither", v.slither},
                       {"coSlither", v.coSlither},
                       {"simulatedSlither", v.simulatedSlither},
                       {"simulatedCoSlither", v.simulatedCoSlither},
                       {"betaD", v.betaD},
                       {"betaE", v.betaE},
                       {"alphaS", v.alphaS},
                       {"alphaL", v.alphaL},
                       {"alpha", v.alpha},
                       {"beta", v.beta},
                       {"deg", v.deg},
                       {"codeg", v.codeg},
                       {"p", v.p},
                       {"q", v.q},
                       {"sigma", v.sigma},
                       {"tapePeriod", v.tapePeriod},
                       {"scrollPeriod", v.scrollPeriod},
                       {"simulatedSigma", v.simulatedSigma},
                       {"simulatedTapePeriod", v.simulatedTapePeriod},
                       {"degP1", v.degP1},
                       {"codegP1", v.codegP1},
                       {"table", v.table},
                       {"sums", v.sums},
                       {"agreement", v.agreement},
                       {"consistent", v.consistent}};
}

void from_json(const nlohmann::json& j, OrbitReport& v)
{
    j.at("n").get_to(v.n);
    j.at("seed").get_to(v.seed);
    j.at("rows").get_to(v.rows);
    j.at("orbitLength").get_to(v.orbitLength);
    j.at("analysisStart").get_to(v.analysisStart);
    j.at("analysisRow").get_to(v.analysisRow);
    j.at("slither").get_to(v.slither);
    j.at("coSlither").get_to(v.coSlither);
    j.at("simulatedSlither").get_to(v.simulatedSlither);
    j.at("simulatedCoSlither").get_to(v.simulatedCoSlither);
    j.at("betaD").get_to(v.betaD);
    j.at("betaE").get_to(v.betaE);
    j.at("alphaS").get_to(v.alphaS);
    j.at("alphaL").get_to(v.alphaL);
    j.at("alpha").get_to(v.alpha);
    j.at("beta").get_to(v.beta);
    j.at("deg").get_to(v.deg);
    j.at("codeg").get_to(v.codeg);
    j.at("p").get_to(v.p);
    j.at("q").get_to(v.q);
    j.at("sigma").get_to(v.sigma);
    j.at("tapePeriod").get_to(v.tapePeriod);
    j.at("scrollPeriod").get_to(v.scrollPeriod);
    j.at("simulatedSigma").get_to(v.simulatedSigma);
    j.at("simulatedTapePeriod").get_to(v.simulatedTapePeriod);
    j.at("degP1").get_to(v.degP1);
    j.at("codegP1").get_to(v.codegP1);
    j.at("table").get_to(v.table);
    j.at("sums").get_to(v.sums);
    j.at("agreement").get_to(v.agreement);
    j.at("consistent").get_to(v.consistent);
}

TableReport build_table_report(const Scroll& s, int omega)
{
    const OrbitTable t(s, omega);
    const SnakePartition part = snakes_and_cosnakes(s);
    const OuroborosPartition op = ouroboros_partition(t);
    const SwallowPermutation sw = swallow(t, part);
    const SwallowPermutation csw = co_swallow(t, part);
    const OuroborosCounts pred = predicted_counts(s, omega);
    const GroupInvariants g = group_invariants(t, op, part.alpha, part.beta);
    const SimulatedGroup sg = simulated_group(t, op);
    const ColorPreserving cp = color_conditions(t, part, op, sw, csw, fundamental_degrees(s));

    TableReport r;
    r.n = s.n();
    r.omega = omega;
    r.r = t.r();
    r.eta = t.eta();
    r.barAlpha = op.bar_alpha;
    r.barBeta = op.bar_beta;
    r.predictedBarAlpha = pred.bar_alpha;
    r.predictedBarBeta = pred.bar_beta;
    r.degP = part.alpha / op.bar_alpha;
    r.codegP = part.beta / op.bar_beta;
    r.swallowCycles = sw.cycles;
    r.coSwallowCycles = csw.cycles;
    r.swallowShift = sw.uniform ? sw.shift : -1;
    r.coSwallowShift = csw.uniform ? csw.shift : -1;
    r.invariantFactors = {g.d1, g.d2};
    r.simulatedInvariantFactors = {sg.invariants.d1, sg.invariants.d2};
    r.tableSlither = table_slither(t, op).word();
    r.tableCoSlither = table_coslither(t, op).word();
    r.colorPreserving = cp.agree() && cp.value();
    return r;
}

SumReport build_sum_report(const Scroll& s)
{
    const SumVector v = sum_vector(OrbitTable(s, 1));
    const int cs = col_scale(s).value;
    const PeriodChecks c = period_checks(v.lambda, s.n(), cs);
    return {s.n(), v.sums, v.lambda, cs, {c.odd, c.divides, c.four_lambda}};
}

OrbitReport build_orbit_report(const IndependentSet& seed, int omega)
{
    const Scroll s = scroll_from_seed(seed);
    const ScrollAnalysis a = analyze(s);
    const SnakePartition part = snakes_and_cosnakes(s, a.metrics.sigma);
    const FundamentalDegrees fd = fundamental_degrees(s);

    OrbitReport r;
    r.n = s.n();
    r.seed = seed.str();
    for (const auto& row : s.base().rows)
        r.rows.push_back(row.str());
    r.orbitLength = s.m();
    r.analysisStart = a.row_start;
    r.analysisRow = a.row.str();
    r.slither = a.slither.word();
    r.coSlither = a.co_slither.word();
    r.simulatedSlither = a.walk.slither;
    r.simulatedCoSlither = a.walk.co_slither;
    r.betaD = a.slither.beta_D();
    r.betaE = a.slither.beta_E();
    r.alphaS = a.co_slither.alpha_S();
    r.alphaL = a.co_slither.alpha_L();
    r.alpha = part.alpha;
    r.beta = part.beta;
    r.deg = a.metrics.deg;
    r.codeg = a.metrics.codeg;
    r.p = a.metrics.p;
    r.q = a.metrics.q;
    r.sigma = a.metrics.sigma;
    r.tapePeriod = a.metrics.T_tape;
    r.scrollPeriod = a.metrics.T_scroll;
    r.simulatedSigma = a.walk.sigma;
    r.simulatedTapePeriod = a.simulated_period;
    r.degP1 = fd.deg_p1;
    r.codegP1 = fd.codeg_p1;
    r.table = build_table_report(s, omega);
    r.sums = build_sum_report(s);

    const auto& t = r.table;
    r.agreement = {
        {"slitherMatchesWalk", cyclic::is_rotation(r.slither, r.simulatedSlither)},
        {"coSlitherMatchesWalk", cyclic::is_rotation(r.coSlither, r.simulatedCoSlither)},
        {"scaleMatchesWalk", r.sigma == r.simulatedSigma},
        {"tapePeriodMatchesSimulation", r.tapePeriod == r.simulatedTapePeriod},
        {"scrollPeriodMatchesOrbit", r.scrollPeriod == r.orbitLength},
        {"snakeCountsMatchWords",
         r.alpha == static_cast<int>(r.coSlither.size()) && r.beta == static_cast<int>(r.slither.size())},
        {"colScaleMatchesScale", r.sums.colScale == r.sigma % r.n},
        {"ouroborosCountsMatchPrediction",
         t.barAlpha == t.predictedBarAlpha && t.barBeta == t.predictedBarBeta},
        {"groupMatchesSimulation", t.invariantFactors == t.simulatedInvariantFactors},
        {"swallowsUniform", t.swallowShift >= 0 && t.coSwallowShift >= 0},
        {"tableSlitherPowers",
         cyclic::is_rotation(cyclic::power(t.tableSlither, static_cast<std::size_t>(t.codegP)), r.slither) &&
             cyclic::is_rotation(cyclic::power(t.tableCoSlither, static_cast<std::size_t>(t.degP)), r.coSlither)},
    };
    r.consistent = true;
    for (const auto& [name, ok] : r.agreement)
        r.consistent = r.consistent && ok;
    return r;
}

nlohmann::json scroll_window_json(const Scroll& s, std::int64_t rows)
{
    nlohmann::json out;
    out["n"] = s.n();
    std::vector<std::string> text;
    std::vector<std::array<std::int64_t, 2>> live;
    for (std::int64_t i = 0; i < rows; ++i) {
        std::string row;
        for (int j = 1; j <= s.n(); ++j) {
            const bool on = s.at(i, j);
            row.push_back(on ? '1' : '0');
            if (on)
                live.push_back({i, j});
        }
        text.push_back(std::move(row));
    }
    out["rows"] = text;
    out["liveEntries"] = live;
    return out;
}

nlohmann::json classification_json(const Classification& c)
{
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& q : c.quadruples) {
        nlohmann::json g;
        g["quadruple"] = {{"betaE", q.quadruple.beta_E},
                          {"alphaS", q.quadruple.alpha_S},
                          {"alphaL", q.quadruple.alpha_L},
                          {"betaD", q.quadruple.beta_D}};
        g["slitherNecklaces"] = q.slither_necklaces;
        g["coSlitherNecklaces"] = q.co_slither_necklaces;
        std::vector<std::string> rows, tapes;
        for (const auto& t : c.tapes)
            if (t.quadruple == q.quadruple) {
                rows.push_back(t.first_row.str());
                tapes.push_back(t.tape_canonical);
            }
        g["firstRows"] = rows;
        g["tapeCanonical"] = tapes;
        groups.push_back(std::move(g));
    }
    return {{"n", c.n},
            {"quadruples", groups},
            {"counts",
             {{"quadruples", c.quadruples.size()},
              {"gfCount", gf_count(c.n)},
              {"necklacePairs", c.necklace_pairs},
              {"tapes", c.distinct_tapes}}}};
}

} // namespace snakes
