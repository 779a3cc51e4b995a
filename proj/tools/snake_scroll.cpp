// snake-scroll: orbit analysis, classification and verification from the shell.
// Exit codes: 0 success, 1 input error, 2 theorem violation.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "snakes/classification.hpp"
#include "snakes/errors.hpp"
#include "snakes/render.hpp"
#include "snakes/report.hpp"
#include "snakes/slither_calculus.hpp"
#include "snakes/sum_vectors.hpp"
#include "snakes/verify.hpp"

using namespace snakes;

namespace {

constexpr int kInputError = 1;
constexpr int kViolation = 2;

int run_orbit(int n, const std::string& seed_word, int omega, const std::string& format, bool no_color, long rows)
{
    if (static_cast<int>(seed_word.size()) != n)
        throw InputError("seed has length " + std::to_string(seed_word.size()) + ", expected " + std::to_string(n));
    const IndependentSet seed(seed_word);
    const OrbitReport report = build_orbit_report(seed, omega);
    const Scroll s = scroll_from_seed(seed);
    const std::int64_t shown = rows > 0 ? rows : s.m();

    if (format == "json") {
        std::cout << nlohmann::json(report).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << orbit_report_csv(report);
    } else if (format == "svg") {
        std::cout << render_scroll_svg(s, snakes_and_cosnakes(s), shown);
    } else {
        const bool ansi = !no_color && isatty(fileno(stdout));
        std::cout << orbit_report_text(report) << '\n';
        std::cout << "     snakes" << std::string(static_cast<std::size_t>(std::max(n - 2, 1)), ' ') << "co-snakes\n";
        std::cout << render_scroll_ascii(s, snakes_and_cosnakes(s), shown, ansi);
    }
    return report.consistent ? 0 : kViolation;
}

int run_classify(int n, const std::string& format)
{
    const Classification c = enumerate_ticker_tapes(n);
    if (format == "json")
        std::cout << classification_json(c).dump(2) << '\n';
    else if (format == "csv")
        std::cout << classification_csv(c);
    else
        std::cout << classification_text(c);
    return 0;
}

int run_verify(const VerifyOptions& opt, const std::string& format)
{
    const VerifyResult r = verify(opt);
    if (format == "json")
        std::cout << verify_json(r).dump(2) << '\n';
    else
        std::cout << verify_text(r);
    return r.violations() == 0 ? 0 : kViolation;
}

int run_sum_period(int lambda, int k, const std::string& format)
{
    const PeriodConstruction c = construct_period_lambda(lambda, k);
    if (format == "json") {
        const nlohmann::json j{{"lambda", c.lambda},
                               {"k", c.k},
                               {"n", c.n},
                               {"slither", c.pair.slither.word()},
                               {"coSlither", c.pair.co_slither.word()},
                               {"firstRow", c.first_row.str()},
                               {"sumVector", c.sums.sums},
                               {"period", c.sums.lambda},
                               {"snakeContribution", c.snake_contribution}};
        std::cout << j.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << construction_csv(c);
    } else {
        std::cout << construction_text(c);
    }
    return 0;
}

int run_construct(const std::string& slither, const std::string& coslither, int n, const std::string& format)
{
    const FeasiblePair pair{Slither(slither), CoSlither(coslither)};
    const FirstRow fr = construct_first_row_detailed(pair, n);
    const Slither back_s = slither_from_row(fr.row);
    const CoSlither back_c = coslither_from_row(fr.row);
    const bool round_trip = back_s.canonical() == pair.slither.canonical() &&
                            back_c.canonical() == pair.co_slither.canonical();
    const ScrollAnalysis a = analyze(scroll_from_seed(fr.row));
    const bool simulated = a.slither.canonical() == pair.slither.canonical() &&
                           a.co_slither.canonical() == pair.co_slither.canonical();
    if (format == "json") {
        const nlohmann::json j{{"n", n},
                               {"slither", slither},
                               {"coSlither", coslither},
                               {"firstRow", fr.row.str()},
                               {"rotation", fr.rotation},
                               {"extractedSlither", back_s.word()},
                               {"extractedCoSlither", back_c.word()},
                               {"roundTrip", round_trip},
                               {"orbitAgrees", simulated}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << fr.row.str() << '\n';
        std::cout << "extracted slither " << back_s.word() << ", co-slither " << back_c.word() << '\n';
        std::cout << "round trip " << (round_trip ? "ok" : "FAILED") << ", orbit words "
                  << (simulated ? "agree" : "DISAGREE") << '\n';
    }
    return round_trip && simulated ? 0 : kViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Toggle dynamics of independent sets on cycle graphs"};
    app.require_subcommand(1);

    int n = 0;
    std::string seed;
    int omega = 1;
    std::string format = "text";
    bool no_color = false;
    long rows = 0;
    auto* orbit = app.add_subcommand("orbit", "Analyse the orbit of one independent set");
    orbit->add_option("--n", n, "Cycle size")->required();
    orbit->add_option("--seed", seed, "Seed word over {0,1}")->required();
    orbit->add_option("--omega", omega, "Table frequency")->check(CLI::PositiveNumber);
    orbit->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv", "svg"}));
    orbit->add_flag("--no-color", no_color, "Plain ASCII rendering");
    orbit->add_option("--rows", rows, "Rows to render (default: one orbit)");

    auto* classify = app.add_subcommand("classify", "List every ticker tape on n vertices");
    classify->add_option("--n", n, "Cycle size")->required();
    classify->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    VerifyOptions vopt;
    int ouro_max = -1;
    auto* verify_cmd = app.add_subcommand("verify", "Check the invariants over every orbit in a range");
    verify_cmd->add_option("--n-min", vopt.n_min);
    verify_cmd->add_option("--n-max", vopt.n_max);
    verify_cmd->add_option("--omega-max", vopt.omega_max);
    verify_cmd->add_option("--ouroboros-n-max", ouro_max, "Largest n for table checks (default n-max)");
    verify_cmd->add_option("--threads", vopt.threads);
    verify_cmd->add_option("--budget", vopt.budget_seconds, "Seconds before stopping with a partial report");
    verify_cmd->add_flag("--allow-large", vopt.allow_large, "Allow n-max above 20");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    int lambda = 0, k = 0;
    auto* sum_period = app.add_subcommand("sum-period", "Build an orbit with a given sum-vector period");
    sum_period->add_option("--lambda", lambda)->required();
    sum_period->add_option("--k", k)->required();
    sum_period->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    std::string slither, coslither;
    auto* construct = app.add_subcommand("construct", "First row of the tape with the given words");
    construct->add_option("--slither", slither)->required();
    construct->add_option("--coslither", coslither)->required();
    construct->add_option("--n", n)->required();
    construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*orbit)
            return run_orbit(n, seed, omega, format, no_color, rows);
        if (*classify)
            return run_classify(n, format);
        if (*verify_cmd) {
            vopt.ouroboros_n_max = ouro_max < 0 ? vopt.n_max : ouro_max;
            return run_verify(vopt, format);
        }
        if (*sum_period)
            return run_sum_period(lambda, k, format);
        if (*construct)
            return run_construct(slither, coslither, n, format);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return kViolation;
    }
    return 0;
}
