#include "snakes/render.hpp"

#include <array>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace snakes {

namespace {

constexpr std::array<const char*, 8> kSnakePalette{"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                                   "#9467bd", "#8c564b", "#e377c2", "#17becf"};
constexpr std::array<const char*, 8> kCoSnakePalette{"#393b79", "#637939", "#8c6d31", "#843c39",
                                                     "#7b4173", "#3182bd", "#e6550d", "#31a354"};
constexpr std::array<int, 6> kAnsiSnake{31, 34, 32, 33, 35, 36};
constexpr std::array<int, 6> kAnsiCoSnake{91, 94, 92, 93, 95, 96};

char snake_letter(int label) { return static_cast<char>('A' + label % 26); }
char cosnake_letter(int label) { return static_cast<char>('a' + label % 26); }

template <typename T>
std::string join(const std::vector<T>& v, const char* sep)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? sep : "") << v[i];
    return out.str();
}

std::string cycles_text(const std::vector<std::vector<int>>& cycles)
{
    std::ostringstream out;
    for (const auto& c : cycles) {
        out << '(';
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? " " : "") << c[i];
        out << ')';
    }
    return out.str();
}

} // namespace

std::string render_scroll_ascii(const Scroll& s, const SnakePartition& part, std::int64_t rows, bool ansi)
{
    std::ostringstream out;
    auto cell = [&](TapeIndex k, bool co) {
        if (!s.at(k))
            return std::string(".");
        const int label = co ? part.cosnake_of(k) : part.snake_of(k);
        const std::string letter(1, co ? cosnake_letter(label) : snake_letter(label));
        if (!ansi)
            return letter;
        const int code = co ? kAnsiCoSnake[static_cast<std::size_t>(label) % kAnsiCoSnake.size()]
                            : kAnsiSnake[static_cast<std::size_t>(label) % kAnsiSnake.size()];
        return "\033[1;" + std::to_string(code) + "m" + letter + "\033[0m";
    };
    for (std::int64_t i = 0; i < rows; ++i) {
        std::string left, right;
        for (int j = 1; j <= s.n(); ++j) {
            const TapeIndex k = to_index({i, j}, s.n());
            left += cell(k, false);
            right += cell(k, true);
        }
        out << std::setw(3) << i << "  " << left << "    " << right << '\n';
    }
    return out.str();
}

std::string render_scroll_svg(const Scroll& s, const SnakePartition& part, std::int64_t rows)
{
    const int n = s.n();
    const double u = 24.0;
    const double width = (n + 1) * u;
    const double height = (static_cast<double>(rows) + 1) * u;
    const double left_margin = 0.5 * u;
    const double right_margin = (n + 0.5) * u;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 " << -u << ' ' << width << ' ' << height << "\">\n";
    out << "<rect x=\"" << left_margin << "\" y=\"" << -0.5 * u << "\" width=\"" << n * u << "\" height=\""
        << static_cast<double>(rows) * u << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";

    struct Pt {
        double x, y;
    };
    auto at = [&](std::int64_t row, std::int64_t col) { return Pt{static_cast<double>(col) * u, static_cast<double>(row) * u}; };
    auto inside = [&](std::int64_t row) { return row >= 0 && row < rows; };

    // Parallelogram tiles t, s(t), s(c(t)), c(t) that do not cross the margins.
    out << "<g opacity=\"0.18\">\n";
    for (std::int64_t i = 0; i < rows; ++i)
        for (int j = 1; j <= n; ++j) {
            const TapeIndex t = to_index({i, j}, n);
            if (!s.at(t))
                continue;
            const std::int64_t a = tape_advance(successor_step(s, t), n);
            const std::int64_t b = tape_advance(co_successor_step(s, t), n);
            const TapeIndex corners[4] = {t, t + a, t + a + b, t + b};
            // Universal coordinates: rows from the step types, cols unwrapped.
            const LiveEntry e = to_entry(t, n);
            const std::int64_t dr_s = a == 2 ? 0 : 1, dc_s = a == 2 ? 2 : 1;
            const std::int64_t dr_c = 2, dc_c = b == 2 * n - 1 ? -1 : -2;
            const std::int64_t rr[4] = {e.row, e.row + dr_s, e.row + dr_s + dr_c, e.row + dr_c};
            const std::int64_t cc[4] = {e.col, e.col + dc_s, e.col + dc_s + dc_c, e.col + dc_c};
            bool ok = true;
            for (int c = 0; c < 4; ++c)
                ok = ok && inside(rr[c]) && cc[c] >= 1 && cc[c] <= n && to_index({rr[c], static_cast<int>(cc[c])}, n) == corners[c];
            if (!ok)
                continue;
            out << "<polygon fill=\"" << kSnakePalette[static_cast<std::size_t>(part.snake_of(t)) % kSnakePalette.size()]
                << "\" points=\"";
            for (int c = 0; c < 4; ++c) {
                const Pt p = at(rr[c], cc[c]);
                out << (c ? " " : "") << p.x << ',' << p.y;
            }
            out << "\"/>\n";
        }
    out << "</g>\n";

    auto edge = [&](std::int64_t i, int j, std::int64_t dr, std::int64_t dc, const char* colour, bool dashed) {
        const std::int64_t ti = i + dr;
        const std::int64_t tj = j + dc;
        const LiveEntry target = project({ti, tj}, n);
        if (!inside(target.row))
            return;
        const std::string style = std::string("stroke=\"") + colour + "\" stroke-width=\"2\"" +
                                  (dashed ? " stroke-dasharray=\"4 3\"" : "");
        const Pt p = at(i, j);
        const Pt q = at(ti, tj);
        if (tj >= 1 && tj <= n) {
            out << "<line x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\"" << q.x << "\" y2=\"" << q.y << "\" " << style
                << "/>\n";
            return;
        }
        // Split at the margin; the second half re-enters one row lower or higher.
        const double margin = tj > n ? right_margin : left_margin;
        const double f = (margin - p.x) / (q.x - p.x);
        const Pt cross{margin, p.y + f * (q.y - p.y)};
        const double shift_x = tj > n ? -n * u : n * u;
        const double shift_y = tj > n ? u : -u;
        const Pt reentry{cross.x + shift_x, cross.y + shift_y};
        const Pt r = at(target.row, target.col);
        out << "<line x1=\"" << p.x << "\" y1=\"" << p.y << "\" x2=\"" << cross.x << "\" y2=\"" << cross.y << "\" "
            << style << "/>\n";
        out << "<line x1=\"" << reentry.x << "\" y1=\"" << reentry.y << "\" x2=\"" << r.x << "\" y2=\"" << r.y << "\" "
            << style << "/>\n";
        out << "<path d=\"M" << reentry.x << ',' << reentry.y - 3 << " l4,3 l-4,3 z\" fill=\"" << colour << "\"/>\n";
    };

    for (std::int64_t i = 0; i < rows; ++i)
        for (int j = 1; j <= n; ++j) {
            const TapeIndex t = to_index({i, j}, n);
            if (!s.at(t))
                continue;
            const Step st = successor_step(s, t);
            const Step ct = co_successor_step(s, t);
            const char* snake_colour = kSnakePalette[static_cast<std::size_t>(part.snake_of(t)) % kSnakePalette.size()];
            const char* co_colour =
                kCoSnakePalette[static_cast<std::size_t>(part.cosnake_of(t)) % kCoSnakePalette.size()];
            edge(i, j, st == Step::D ? 1 : 0, st == Step::D ? 1 : 2, snake_colour, false);
            edge(i, j, 2, ct == Step::S ? -1 : -2, co_colour, true);
        }

    for (std::int64_t i = 0; i < rows; ++i)
        for (int j = 1; j <= n; ++j) {
            const Pt p = at(i, j);
            const TapeIndex t = to_index({i, j}, n);
            if (s.at(t))
                out << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"6\" fill=\""
                    << kSnakePalette[static_cast<std::size_t>(part.snake_of(t)) % kSnakePalette.size()]
                    << "\" stroke=\""
                    << kCoSnakePalette[static_cast<std::size_t>(part.cosnake_of(t)) % kCoSnakePalette.size()]
                    << "\" stroke-width=\"2.5\"/>\n";
            else
                out << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"1.5\" fill=\"#999999\"/>\n";
        }
    out << "</svg>\n";
    return out.str();
}

std::string orbit_report_text(const OrbitReport& r)
{
    std::ostringstream out;
    out << "n = " << r.n << ", seed " << r.seed << ", orbit length " << r.orbitLength << "\n";
    out << "analysis row " << r.analysisRow << " (tape index " << r.analysisStart << ")\n";
    out << "slither     " << r.slither << "   walk " << r.simulatedSlither << "\n";
    out << "co-slither  " << r.coSlither << "   walk " << r.simulatedCoSlither << "\n";
    out << "beta_D = " << r.betaD << ", beta_E = " << r.betaE << ", alpha_S = " << r.alphaS
        << ", alpha_L = " << r.alphaL << "\n";
    out << "snakes alpha = " << r.alpha << ", co-snakes beta = " << r.beta << "\n";
    out << "deg = " << r.deg << ", codeg = " << r.codeg << ", p = " << r.p << ", q = " << r.q << "\n";
    out << "scale sigma = " << r.sigma << " (walk " << r.simulatedSigma << ")\n";
    out << "tape period T = " << r.tapePeriod << " (simulated " << r.simulatedTapePeriod << "), scroll period "
        << r.scrollPeriod << "\n";
    out << "fundamental degrees deg(p1) = " << r.degP1 << ", codeg(p1) = " << r.codegP1 << "\n";
    const TableReport& t = r.table;
    out << "table omega = " << t.omega << ": r = " << t.r << ", eta = " << t.eta << ", ouroboroi " << t.barAlpha
        << " (predicted " << t.predictedBarAlpha << "), co-ouroboroi " << t.barBeta << " (predicted "
        << t.predictedBarBeta << ")\n";
    out << "  deg(p) = " << t.degP << ", codeg(p) = " << t.codegP << "\n";
    out << "  swallow " << cycles_text(t.swallowCycles) << " shift " << t.swallowShift << "\n";
    out << "  co-swallow " << cycles_text(t.coSwallowCycles) << " shift " << t.coSwallowShift << "\n";
    out << "  group Z_" << t.invariantFactors[0] << " x Z_" << t.invariantFactors[1] << " (walk Z_"
        << t.simulatedInvariantFactors[0] << " x Z_" << t.simulatedInvariantFactors[1] << ")\n";
    out << "  table slither " << t.tableSlither << ", table co-slither " << t.tableCoSlither << "\n";
    out << "  color-preserving " << (t.colorPreserving ? "yes" : "no") << "\n";
    out << "sum vector " << join(r.sums.sumVector, " ") << "\n";
    out << "  period " << r.sums.lambda << ", column scale " << r.sums.colScale << ", odd "
        << (r.sums.checks.odd ? "yes" : "no") << ", divides " << (r.sums.checks.divides ? "yes" : "no")
        << ", n >= 4*period " << (r.sums.checks.fourLambda ? "yes" : "no") << "\n";
    out << "closed forms agree with simulation: " << (r.consistent ? "yes" : "NO") << "\n";
    for (const auto& [name, ok] : r.agreement)
        if (!ok)
            out << "  mismatch: " << name << "\n";
    return out.str();
}

std::string orbit_report_csv(const OrbitReport& r)
{
    std::ostringstream out;
    out << "key,value\n";
    out << "n," << r.n << "\nseed," << r.seed << "\norbitLength," << r.orbitLength << "\nslither," << r.slither
        << "\ncoSlither," << r.coSlither << "\nalpha," << r.alpha << "\nbeta," << r.beta << "\ndeg," << r.deg
        << "\ncodeg," << r.codeg << "\np," << r.p << "\nq," << r.q << "\nsigma," << r.sigma << "\ntapePeriod,"
        << r.tapePeriod << "\nscrollPeriod," << r.scrollPeriod << "\ndegP1," << r.degP1 << "\ncodegP1," << r.codegP1
        << "\nomega," << r.table.omega << "\neta," << r.table.eta << "\nbarAlpha," << r.table.barAlpha
        << "\nbarBeta," << r.table.barBeta << "\ninvariantFactors," << join(r.table.invariantFactors, " ")
        << "\ncolorPreserving," << (r.table.colorPreserving ? "true" : "false") << "\nsumVector,"
        << join(r.sums.sumVector, " ") << "\nlambda," << r.sums.lambda << "\ncolScale," << r.sums.colScale
        << "\nconsistent," << (r.consistent ? "true" : "false") << "\n";
    return out.str();
}

std::string classification_text(const Classification& c)
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%6s %8s %8s %8s  %-24s %-14s %s\n", "beta_E", "alpha_S", "alpha_L", "beta_D",
                  "slither", "co-slither", "first row");
    out << line;
    for (const auto& t : c.tapes) {
        std::snprintf(line, sizeof line, "%6d %8d %8d %8d  %-24s %-14s %s\n", t.quadruple.beta_E, t.quadruple.alpha_S,
                      t.quadruple.alpha_L, t.quadruple.beta_D, t.slither.c_str(), t.co_slither.c_str(),
                      t.first_row.str().c_str());
        out << line;
    }
    out << c.quadruples.size() << " quadruples (generating function " << gf_count(c.n) << "), " << c.distinct_tapes
        << " ticker tapes up to shift\n";
    return out.str();
}

std::string classification_csv(const Classification& c)
{
    std::ostringstream out;
    out << "betaE,alphaS,alphaL,betaD,slither,coSlither,firstRow,tapeCanonical\n";
    for (const auto& t : c.tapes)
        out << t.quadruple.beta_E << ',' << t.quadruple.alpha_S << ',' << t.quadruple.alpha_L << ','
            << t.quadruple.beta_D << ',' << t.slither << ',' << t.co_slither << ',' << t.first_row.str() << ','
            << t.tape_canonical << '\n';
    return out.str();
}

std::string construction_text(const PeriodConstruction& c)
{
    std::ostringstream out;
    out << "lambda = " << c.lambda << ", k = " << c.k << ", n = " << c.n << "\n";
    out << "slither " << c.pair.slither.word() << "\nco-slither " << c.pair.co_slither.word() << "\n";
    out << "first row " << c.first_row.str() << "\n";
    out << "sum vector " << join(c.sums.sums, " ") << "\n";
    out << "one snake  " << join(c.snake_contribution, " ") << "\n";
    out << "period " << c.sums.lambda << "\n";
    return out.str();
}

std::string construction_csv(const PeriodConstruction& c)
{
    std::ostringstream out;
    out << "column,sum,snake\n";
    for (std::size_t i = 0; i < c.sums.sums.size(); ++i)
        out << i + 1 << ',' << c.sums.sums[i] << ',' << c.snake_contribution[i] << '\n';
    return out.str();
}

} // namespace snakes
