#include "snakes/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "snakes/classification.hpp"
#include "snakes/cyclic_words.hpp"
#include "snakes/errors.hpp"
#include "snakes/orbit_tables.hpp"
#include "snakes/slither_calculus.hpp"
#include "snakes/sum_vectors.hpp"

namespace snakes {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

enum Check : int {
    // scroll level
    LocalZeros,
    ExactlyOne,
    Commutation,
    Parallelogram,
    Torsor,
    FreeAction,
    NearRowCoSnakes,
    ConstantStepTypes,
    Linearity,
    BetaDRelation,
    LetterEquation,
    CoprimeDegrees,
    TapePeriod,
    ScrollPeriod,
    FormulaVsWalk,
    ScaleForms,
    PartitionCounts,
    PeriodCharacterization,
    SumPeriodOdd,
    SumPeriodDivides,
    SumPeriodBound,
    OmegaLinearity,
    CrosswiseDegrees,
    LiteralDegrees,
    // tables
    OuroborosCounts_,
    UniformSwallows,
    SwallowCycles,
    PresentationVsWalk,
    SimpleTransitivity,
    ColorConditions,
    TableSlithers,
    SplitOverOuroboroi,
    SplitOverCoOuroboroi,
    Exceptions,
    CheckCount
};

struct CheckInfo {
    const char* name;
    CheckKind kind;
};

constexpr CheckInfo kChecks[CheckCount] = {
    {"local zeros", CheckKind::Theorem},
    {"exactly one candidate", CheckKind::Theorem},
    {"commutation", CheckKind::Theorem},
    {"parallelogram", CheckKind::Theorem},
    {"torsor", CheckKind::Theorem},
    {"free affine action", CheckKind::Theorem},
    {"near-row co-snakes distinct", CheckKind::Theorem},
    {"constant step types", CheckKind::Theorem},
    {"linearity", CheckKind::Theorem},
    {"beta_D = 2(alpha_S+alpha_L)-1", CheckKind::Theorem},
    {"2beta_E+3alpha_S+4alpha_L = n+1", CheckKind::Theorem},
    {"gcd(deg, codeg) = 1", CheckKind::Theorem},
    {"T = gcd(p, q) = simulated", CheckKind::Theorem},
    {"scroll period = orbit length", CheckKind::Theorem},
    {"formula words = walk words", CheckKind::Theorem},
    {"scale forms agree", CheckKind::Theorem},
    {"snake and co-snake counts", CheckKind::Theorem},
    {"period characterization", CheckKind::Theorem},
    {"sum period odd", CheckKind::Theorem},
    {"sum period divides gcd(n, ColScale)", CheckKind::Theorem},
    {"sum period > 1 implies n >= 4 period", CheckKind::Theorem},
    {"sum vector linear in omega", CheckKind::Theorem},
    {"deg(p1) | codeg and codeg(p1) | deg", CheckKind::Theorem},
    {"deg(p1) | deg and codeg(p1) | codeg", CheckKind::Informational},
    {"ouroboros counts = prediction", CheckKind::Theorem},
    {"swallows are uniform shifts", CheckKind::Theorem},
    {"swallow cycle structure", CheckKind::Theorem},
    {"presented group = walked group", CheckKind::Theorem},
    {"simply transitive on the table", CheckKind::Theorem},
    {"color conditions agree", CheckKind::Theorem},
    {"table slithers are roots", CheckKind::Theorem},
    {"group = Z_barAlpha x Z_(eta/barAlpha)", CheckKind::Disputed},
    {"group = Z_barBeta x Z_(eta/barBeta)", CheckKind::Disputed},
    {"no exceptions", CheckKind::Theorem},
};

struct Item {
    int n;
    const Orbit* orbit;
};

struct Outcome {
    std::int64_t passed[CheckCount] = {};
    std::int64_t failed[CheckCount] = {};
    std::vector<std::string> examples[CheckCount];
    int sum_period = 0;
    bool done = false;

    void record(Check c, bool ok, const std::function<std::string()>& detail)
    {
        if (ok) {
            ++passed[c];
            return;
        }
        ++failed[c];
        if (examples[c].size() < kMaxCounterexamples)
            examples[c].push_back(detail());
    }
};

struct Vec {
    std::int64_t row, col;
};

Vec step_vector(Step st)
{
    switch (st) {
    case Step::E: return {0, 2};
    case Step::D: return {1, 1};
    case Step::S: return {2, -1};
    case Step::L: return {2, -2};
    }
    return {0, 0};
}

// Tape index and universal coordinate moved together.
struct Lifted {
    TapeIndex k;
    Vec u;
};

Lifted s_hat(const Scroll& s, Lifted x, bool forward)
{
    const TapeIndex k = forward ? successor(s, x.k) : predecessor(s, x.k);
    const Vec v = step_vector(successor_step(s, forward ? x.k : k));
    return forward ? Lifted{k, {x.u.row + v.row, x.u.col + v.col}} : Lifted{k, {x.u.row - v.row, x.u.col - v.col}};
}

Lifted c_hat(const Scroll& s, Lifted x, bool forward)
{
    const TapeIndex k = forward ? co_successor(s, x.k) : co_predecessor(s, x.k);
    const Vec v = step_vector(co_successor_step(s, forward ? x.k : k));
    return forward ? Lifted{k, {x.u.row + v.row, x.u.col + v.col}} : Lifted{k, {x.u.row - v.row, x.u.col - v.col}};
}

void scroll_checks(const Scroll& s, const VerifyOptions& opt, Outcome& out, const std::string& tag)
{
    const int n = s.n();
    const std::int64_t L = s.tape().length();
    const auto live = s.live_between(1, L);
    auto at = [&](TapeIndex k) { return s.at(k); };
    auto where = [&](TapeIndex k) { return [&tag, k] { return tag + " t=" + std::to_string(k); }; };

    for (TapeIndex k : live) {
        const bool zeros = !at(k - n) && !at(k - n + 1) && !at(k - 1) && !at(k + 1) && !at(k + n - 1) && !at(k + n);
        out.record(LocalZeros, zeros, where(k));
        const bool one = (at(k + 2) + at(k + n + 1)) == 1 && (at(k + 2 * n - 2) + at(k + 2 * n - 1)) == 1;
        out.record(ExactlyOne, one, where(k));
        if (!one)
            continue;
        out.record(Commutation, successor(s, co_successor(s, k)) == co_successor(s, successor(s, k)), where(k));
        const TapeIndex ck = co_successor(s, k);
        const TapeIndex sk = successor(s, k);
        const bool para = successor_step(s, ck) == successor_step(s, k) && co_successor_step(s, sk) == co_successor_step(s, k);
        out.record(Parallelogram, para, where(k));
    }

    const ScrollAnalysis a = analyze(s);
    const ScrollMetrics& m = a.metrics;
    const SnakePartition part = snakes_and_cosnakes(s, m.sigma);
    const std::int64_t N = static_cast<std::int64_t>(part.window.size());

    // Torsor: (a, b) in [0, beta) x [0, alpha) reaches every window entry once.
    {
        std::vector<char> hit(static_cast<std::size_t>(N), 0);
        bool ok = N == static_cast<std::int64_t>(part.alpha) * part.beta;
        TapeIndex row_start = part.window.front();
        for (int i = 0; ok && i < part.beta; ++i) {
            TapeIndex x = row_start;
            for (int j = 0; ok && j < part.alpha; ++j) {
                const long pos = part.position(x);
                ok = pos >= 0 && !hit[static_cast<std::size_t>(pos)];
                if (ok)
                    hit[static_cast<std::size_t>(pos)] = 1;
                x = co_successor(s, x);
            }
            row_start = successor(s, row_start);
        }
        out.record(Torsor, ok, [&] { return tag + " alpha=" + std::to_string(part.alpha) + " beta=" + std::to_string(part.beta); });
    }

    // Free action on the universal cover over a bounded box of exponents.
    {
        constexpr int B = 4;
        for (TapeIndex k : part.window) {
            const LiveEntry e = to_entry(k, n);
            const Lifted origin{k, {e.row, e.col}};
            bool ok = true;
            for (int dir : {1, -1}) {
                Lifted x = origin;
                for (int i = 0; i <= B && ok; ++i) {
                    for (int cdir : {1, -1}) {
                        Lifted y = x;
                        for (int j = 1; j <= B && ok; ++j) {
                            y = c_hat(s, y, cdir > 0);
                            ok = !(y.u.row == e.row && y.u.col == e.col);
                        }
                    }
                    if (i > 0)
                        ok = ok && !(x.u.row == e.row && x.u.col == e.col);
                    x = s_hat(s, x, dir > 0);
                }
            }
            out.record(FreeAction, ok, where(k));
        }
    }

    // Live entries closer than n sit on different co-snakes.
    {
        bool ok = true;
        TapeIndex bad = 0;
        for (std::size_t i = 0; ok && i < live.size(); ++i)
            for (std::size_t j = i + 1; ok && j < live.size() && live[j] - live[i] < n; ++j)
                if (part.cosnake_of(live[i]) == part.cosnake_of(live[j])) {
                    ok = false;
                    bad = live[i];
                }
        out.record(NearRowCoSnakes, ok, where(bad));
    }

    // One c-step type per snake and one s-step type per co-snake.
    {
        std::vector<int> c_type(static_cast<std::size_t>(part.alpha), -1);
        std::vector<int> s_type(static_cast<std::size_t>(part.beta), -1);
        bool ok = true;
        for (TapeIndex k : part.window) {
            int& ct = c_type[static_cast<std::size_t>(part.snake_of(k))];
            int& st = s_type[static_cast<std::size_t>(part.cosnake_of(k))];
            const int cv = static_cast<int>(co_successor_step(s, k));
            const int sv = static_cast<int>(successor_step(s, k));
            ok = ok && (ct < 0 || ct == cv) && (st < 0 || st == sv);
            ct = cv;
            st = sv;
        }
        out.record(ConstantStepTypes, ok, [&] { return tag; });
    }

    // s^(r|P|) advances r p.
    {
        const std::int64_t block = a.slither.length() / m.deg;
        bool ok = true;
        TapeIndex bad = 0;
        for (TapeIndex k : part.window) {
            TapeIndex x = k;
            for (std::int64_t r = 1; ok && r <= 3 * m.deg; ++r) {
                for (std::int64_t i = 0; i < block; ++i)
                    x = successor(s, x);
                if (x - k != r * m.p) {
                    ok = false;
                    bad = k;
                }
            }
            if (!ok)
                break;
        }
        out.record(Linearity, ok, where(bad));
    }

    const int bD = a.slither.beta_D(), bE = a.slither.beta_E();
    const int aS = a.co_slither.alpha_S(), aL = a.co_slither.alpha_L();
    auto counts = [&] {
        return tag + " betaD=" + std::to_string(bD) + " betaE=" + std::to_string(bE) + " alphaS=" + std::to_string(aS) +
               " alphaL=" + std::to_string(aL);
    };
    out.record(BetaDRelation, bD == 2 * (aS + aL) - 1, counts);
    out.record(LetterEquation, 2 * bE + 3 * aS + 4 * aL == n + 1, counts);
    out.record(CoprimeDegrees, std::gcd(m.deg, m.codeg) == 1, [&] {
        return tag + " deg=" + std::to_string(m.deg) + " codeg=" + std::to_string(m.codeg);
    });
    out.record(TapePeriod, m.T_tape == std::gcd(m.p, m.q) && m.T_tape == s.tape().period(), [&] {
        return tag + " T=" + std::to_string(m.T_tape) + " simulated=" + std::to_string(s.tape().period());
    });
    out.record(ScrollPeriod, m.T_scroll == s.m(), [&] {
        return tag + " formula=" + std::to_string(m.T_scroll) + " m=" + std::to_string(s.m());
    });
    out.record(FormulaVsWalk,
               cyclic::is_rotation(a.slither.word(), a.walk.slither) &&
                   cyclic::is_rotation(a.co_slither.word(), a.walk.co_slither),
               [&] { return tag + " formula " + a.slither.word() + "/" + a.co_slither.word() + " walk " + a.walk.slither + "/" + a.walk.co_slither; });
    out.record(ScaleForms,
               m.sigma == 2LL * bE + (n + 1LL) * bD && m.sigma == (2LL * n - 1) * aS + (2LL * n - 2) * aL &&
                   m.sigma == a.walk.sigma,
               [&] { return tag + " sigma=" + std::to_string(m.sigma) + " walk=" + std::to_string(a.walk.sigma); });
    out.record(PartitionCounts, part.alpha == aS + aL && part.beta == bD + bE, [&] {
        return tag + " alpha=" + std::to_string(part.alpha) + " beta=" + std::to_string(part.beta);
    });

    // Shift by l fixes the tape exactly when T | l.
    {
        bool ok = true;
        std::int64_t bad = 0;
        for (std::int64_t l = 1; ok && l <= 3 * m.T_tape; ++l) {
            bool fixed = true;
            for (TapeIndex k = 1; fixed && k <= L; ++k)
                fixed = s.at(k) == s.at(k + l);
            if (fixed != (l % m.T_tape == 0)) {
                ok = false;
                bad = l;
            }
        }
        out.record(PeriodCharacterization, ok, [&] { return tag + " shift=" + std::to_string(bad); });
    }

    const SumVector sv1 = sum_vector(OrbitTable(s, 1));
    const int cs = col_scale(s).value;
    const PeriodChecks pc = period_checks(sv1.lambda, n, cs);
    auto lam = [&] { return tag + " period=" + std::to_string(sv1.lambda) + " ColScale=" + std::to_string(cs); };
    out.record(SumPeriodOdd, pc.odd, lam);
    out.record(SumPeriodDivides, pc.divides, lam);
    out.record(SumPeriodBound, pc.four_lambda, lam);
    out.sum_period = sv1.lambda;
    for (int w = 2; w <= std::max(2, opt.omega_max); ++w) {
        const SumVector sw = sum_vector(OrbitTable(s, w));
        bool ok = sw.lambda == sv1.lambda;
        for (std::size_t i = 0; ok && i < sw.sums.size(); ++i)
            ok = sw.sums[i] == w * sv1.sums[i];
        out.record(OmegaLinearity, ok, [&] { return tag + " omega=" + std::to_string(w); });
    }

    const FundamentalDegrees fd = fundamental_degrees(s);
    auto degs = [&] {
        return tag + " deg=" + std::to_string(m.deg) + " codeg=" + std::to_string(m.codeg) + " deg(p1)=" +
               std::to_string(fd.deg_p1) + " codeg(p1)=" + std::to_string(fd.codeg_p1);
    };
    out.record(CrosswiseDegrees, m.codeg % fd.deg_p1 == 0 && m.deg % fd.codeg_p1 == 0, degs);
    out.record(LiteralDegrees, m.deg % fd.deg_p1 == 0 && m.codeg % fd.codeg_p1 == 0, degs);
}

void table_checks(const Scroll& s, int omega, Outcome& out, const std::string& base_tag)
{
    const std::string tag = base_tag + " omega=" + std::to_string(omega);
    auto plain = [&] { return tag; };
    const SnakePartition part = snakes_and_cosnakes(s);
    const OrbitTable t(s, omega);
    const OuroborosPartition op = ouroboros_partition(t);
    const OuroborosCounts pred = predicted_counts(s, omega);
    out.record(OuroborosCounts_, pred == OuroborosCounts{op.bar_alpha, op.bar_beta}, [&] {
        return tag + " found " + std::to_string(op.bar_alpha) + "," + std::to_string(op.bar_beta) + " predicted " +
               std::to_string(pred.bar_alpha) + "," + std::to_string(pred.bar_beta);
    });

    const SwallowPermutation sw = swallow(t, part);
    const SwallowPermutation csw = co_swallow(t, part);
    out.record(UniformSwallows, sw.uniform && csw.uniform, plain);
    bool cycles_ok = static_cast<int>(sw.cycles.size()) == op.bar_alpha &&
                     static_cast<int>(csw.cycles.size()) == op.bar_beta;
    for (const auto& c : sw.cycles)
        cycles_ok = cycles_ok && static_cast<int>(c.size()) * op.bar_alpha == part.alpha;
    for (const auto& c : csw.cycles)
        cycles_ok = cycles_ok && static_cast<int>(c.size()) * op.bar_beta == part.beta;
    out.record(SwallowCycles, cycles_ok, plain);

    const GroupInvariants g = group_invariants(t, op, part.alpha, part.beta);
    const SimulatedGroup sg = simulated_group(t, op);
    auto group = [&] {
        return tag + " eta=" + std::to_string(t.eta()) + " barAlpha=" + std::to_string(op.bar_alpha) + " barBeta=" +
               std::to_string(op.bar_beta) + " group=Z_" + std::to_string(g.d1) + " x Z_" + std::to_string(g.d2);
    };
    out.record(PresentationVsWalk, g == sg.invariants && g.order() == t.eta(), group);
    out.record(SimpleTransitivity, sg.simply_transitive, plain);
    out.record(SplitOverOuroboroi, g == cyclic_product(op.bar_alpha, t.eta() / op.bar_alpha), group);
    out.record(SplitOverCoOuroboroi, g == cyclic_product(op.bar_beta, t.eta() / op.bar_beta), group);

    const ColorPreserving cp = color_conditions(t, part, op, sw, csw, fundamental_degrees(s));
    out.record(ColorConditions, cp.agree(), plain);

    const ScrollAnalysis a = analyze(s);
    const Slither ts = table_slither(t, op);
    const CoSlither tc = table_coslither(t, op);
    const bool roots =
        ts.length() == op.bar_beta && tc.length() == op.bar_alpha &&
        cyclic::is_rotation(cyclic::power(ts.word(), static_cast<std::size_t>(part.beta / op.bar_beta)), a.slither.word()) &&
        cyclic::is_rotation(cyclic::power(tc.word(), static_cast<std::size_t>(part.alpha / op.bar_alpha)),
                            a.co_slither.word());
    out.record(TableSlithers, roots, [&] { return tag + " table slither " + ts.word() + " co-slither " + tc.word(); });
}

unsigned worker_count(unsigned requested)
{
    unsigned k = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SNAKE_SCROLL_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1)
            k = std::min<unsigned>(k, static_cast<unsigned>(cap));
    }
    return k;
}

} // namespace

const CheckTally& VerifyResult::check(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return c;
    throw InputError("no check named " + name);
}

std::int64_t VerifyResult::violations() const
{
    std::int64_t v = 0;
    for (const auto& c : checks)
        if (c.kind == CheckKind::Theorem)
            v += c.failed;
    return v;
}

VerifyResult verify(const VerifyOptions& opt)
{
    if (opt.n_min < 2 || opt.n_max < opt.n_min)
        throw InputError("need 2 <= n-min <= n-max");
    if (opt.n_max > 20 && !opt.allow_large)
        throw InputError("n-max above 20 needs the large-n override");
    if (opt.omega_max < 1)
        throw InputError("omega-max must be at least 1");

    std::vector<std::vector<Orbit>> by_n;
    std::vector<Item> items;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        by_n.push_back(all_orbits(n));
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (const Orbit& o : by_n[static_cast<std::size_t>(n - opt.n_min)])
            items.push_back({n, &o});

    std::vector<Outcome> outcomes(items.size());
    std::atomic<std::size_t> next{0};
    const auto start = std::chrono::steady_clock::now();
    auto over_budget = [&] {
        if (opt.budget_seconds <= 0)
            return false;
        const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
        return used.count() > opt.budget_seconds;
    };

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size() || over_budget())
                return;
            const Item& it = items[i];
            Outcome& out = outcomes[i];
            const std::string tag = "n=" + std::to_string(it.n) + " seed=" + it.orbit->rows.front().str();
            try {
                const Scroll s(*it.orbit);
                if (opt.scroll_checks)
                    scroll_checks(s, opt, out, tag);
                if (opt.ouroboros_checks && it.n <= opt.ouroboros_n_max)
                    for (int w = 1; w <= opt.omega_max; ++w)
                        table_checks(s, w, out, tag);
                out.record(Exceptions, true, [] { return std::string(); });
            } catch (const std::exception& e) {
                out.record(Exceptions, false, [&] { return tag + ": " + e.what(); });
            }
            out.done = true;
        }
    };

    const unsigned k = std::min<unsigned>(worker_count(opt.threads), static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < k; ++w)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();

    VerifyResult r;
    r.options = opt;
    for (int c = 0; c < CheckCount; ++c)
        r.checks.push_back({kChecks[c].name, kChecks[c].kind, 0, 0, {}});
    for (std::size_t i = 0; i < items.size(); ++i) {
        const Outcome& o = outcomes[i];
        if (!o.done) {
            ++r.skipped;
            r.complete = false;
            continue;
        }
        ++r.orbits;
        if (o.sum_period > 0)
            r.sum_periods[items[i].n].insert(o.sum_period);
        for (int c = 0; c < CheckCount; ++c) {
            CheckTally& t = r.checks[static_cast<std::size_t>(c)];
            t.passed += o.passed[c];
            t.failed += o.failed[c];
            for (const auto& e : o.examples[c])
                if (t.counterexamples.size() < kMaxCounterexamples)
                    t.counterexamples.push_back(e);
        }
    }
    std::erase_if(r.checks, [](const CheckTally& t) { return t.passed == 0 && t.failed == 0; });
    return r;
}

std::string verify_text(const VerifyResult& r)
{
    std::ostringstream out;
    out << "n = " << r.options.n_min << ".." << r.options.n_max << ", omega <= " << r.options.omega_max << ", "
        << r.orbits << " orbits checked";
    if (!r.complete)
        out << ", " << r.skipped << " skipped (budget exceeded, report incomplete)";
    out << "\n";
    for (const auto& c : r.checks) {
        const char* mark = c.failed == 0 ? "ok  " : c.kind == CheckKind::Theorem ? "FAIL" : "note";
        out << mark << "  " << c.name << ": " << c.passed << " passed, " << c.failed << " failed";
        if (c.kind == CheckKind::Disputed)
            out << " (disputed claim, not counted)";
        if (c.kind == CheckKind::Informational)
            out << " (informational)";
        out << "\n";
        for (const auto& e : c.counterexamples)
            out << "        " << e << "\n";
    }
    out << "sum-vector periods achieved:";
    for (const auto& [n, ps] : r.sum_periods) {
        out << " n=" << n << "{";
        bool first = true;
        for (int p : ps) {
            out << (first ? "" : ",") << p;
            first = false;
        }
        out << "}";
    }
    out << "\n" << r.violations() << " violations\n";
    return out.str();
}

nlohmann::json verify_json(const VerifyResult& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        const char* kind = c.kind == CheckKind::Theorem ? "theorem" : c.kind == CheckKind::Disputed ? "disputed" : "informational";
        checks.push_back({{"name", c.name},
                          {"kind", kind},
                          {"passed", c.passed},
                          {"failed", c.failed},
                          {"counterexamples", c.counterexamples}});
    }
    nlohmann::json periods = nlohmann::json::object();
    for (const auto& [n, ps] : r.sum_periods)
        periods[std::to_string(n)] = ps;
    return {{"nMin", r.options.n_min},
            {"nMax", r.options.n_max},
            {"omegaMax", r.options.omega_max},
            {"orbits", r.orbits},
            {"skipped", r.skipped},
            {"complete", r.complete},
            {"violations", r.violations()},
            {"checks", checks},
            {"sumPeriods", periods}};
}

RoundTripResult round_trip_pairs(int n_max)
{
    RoundTripResult r;
    for (int n = 2; n <= n_max; ++n)
        for (const FeasibleQuadruple& q : feasible_quadruples(n))
            for (const auto& ws : necklaces('D', q.beta_D, 'E', q.beta_E))
                for (const auto& wc : necklaces('S', q.alpha_S, 'L', q.alpha_L)) {
                    ++r.pairs;
                    std::string got_s, got_c;
                    try {
                        const IndependentSet row = construct_first_row({Slither(ws), CoSlither(wc)}, n);
                        got_s = slither_from_row(row).word();
                        got_c = coslither_from_row(row).word();
                    } catch (const std::exception& e) {
                        got_s = e.what();
                    }
                    if (cyclic::is_rotation(got_s, ws) && cyclic::is_rotation(got_c, wc))
                        continue;
                    ++r.mismatches;
                    if (r.counterexamples.size() < kMaxCounterexamples)
                        r.counterexamples.push_back("n=" + std::to_string(n) + " " + ws + "/" + wc + " -> " + got_s + "/" + got_c);
                }
    return r;
}

TapeSetResult compare_tape_sets(int n_max)
{
    TapeSetResult r;
    for (int n = 2; n <= n_max; ++n) {
        std::set<std::string> simulated, classified;
        for (const Orbit& o : all_orbits(n))
            simulated.insert(Scroll(o).tape().canonical());
        for (const auto& t : enumerate_ticker_tapes(n).tapes)
            classified.insert(t.tape_canonical);
        ++r.sizes_checked;
        if (simulated != classified) {
            ++r.mismatches;
            if (r.counterexamples.size() < kMaxCounterexamples)
                r.counterexamples.push_back("n=" + std::to_string(n) + ": " + std::to_string(simulated.size()) +
                                            " simulated tapes, " + std::to_string(classified.size()) + " classified");
        }
    }
    return r;
}

} // namespace snakes
