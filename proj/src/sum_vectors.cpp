#include "snakes/sum_vectors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "snakes/errors.hpp"

namespace snakes {

int cyclic_period(const std::vector<std::int64_t>& v)
{
    const int n = static_cast<int>(v.size());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        bool ok = true;
        for (int i = 0; ok && i < n; ++i)
            ok = v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>((i + d) % n)];
        if (ok)
            return d;
    }
    return n;
}

SumVector sum_vector(const OrbitTable& t)
{
    SumVector out;
    out.sums.assign(static_cast<std::size_t>(t.n()), 0);
    for (TapeIndex k : t.live())
        ++out.sums[static_cast<std::size_t>(to_entry(k, t.n()).col - 1)];
    out.lambda = cyclic_period(out.sums);
    return out;
}

ColScaleValue col_scale(const Scroll& s)
{
    const ScrollAnalysis a = analyze(s);
    const int n = s.n();
    const int from_slither = a.slither.beta_D() + 2 * a.slither.beta_E();
    const int from_coslither = n - a.co_slither.alpha_S() - 2 * a.co_slither.alpha_L();
    if (from_slither != from_coslither)
        throw ConsistencyError("column scale forms disagree: " + std::to_string(from_slither) + " vs " +
                               std::to_string(from_coslither));
    if (from_slither < 0 || from_slither >= n || from_slither != a.metrics.sigma % n)
        throw ConsistencyError("column scale is not the scale reduced mod n");
    return {from_slither};
}

PeriodChecks period_checks(int lambda, int n, int col_scale)
{
    PeriodChecks c;
    c.odd = lambda % 2 == 1;
    c.divides = std::gcd(n, col_scale) % lambda == 0;
    c.four_lambda = lambda == 1 || n >= 4 * lambda;
    return c;
}

std::vector<std::int64_t> snake_column_contribution(const OrbitTable& t, const SnakePartition& part, int snake)
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(t.n()), 0);
    for (TapeIndex k : t.live())
        if (part.snake_of(k) == snake)
            ++out[static_cast<std::size_t>(to_entry(k, t.n()).col - 1)];
    return out;
}

FeasiblePair period_lambda_pair(int lambda, int k)
{
    if (lambda < 3 || lambda % 2 == 0)
        throw InputError("period must be odd and at least 3, got " + std::to_string(lambda));
    if (k < 4)
        throw InputError("multiplier k must be at least 4, got " + std::to_string(k));
    auto rep = [](char c, int times) { return std::string(static_cast<std::size_t>(times), c); };
    if (k % 2 == 0) {
        const int tail = lambda * k / 2 - lambda - 1;
        return {Slither(rep('D', lambda - 2) + "E" + "DD" + rep('E', tail)),
                CoSlither("S" + rep('L', (lambda - 1) / 2))};
    }
    const int tail = ((k - 4) * lambda - 1) / 2;
    return {Slither(rep('D', 2 * lambda + 1) + rep('E', tail)), CoSlither("SS" + rep('L', lambda - 1))};
}

namespace {

PeriodConstruction finish(int lambda, int k, FeasiblePair pair)
{
    const int n = lambda * k;
    IndependentSet row = construct_first_row(pair, n);
    const Scroll s = scroll_from_seed(row);
    const OrbitTable t(s, 1);
    const SnakePartition part = snakes_and_cosnakes(s);
    PeriodConstruction out{lambda, k, n, std::move(pair), std::move(row), sum_vector(t), {}};
    out.snake_contribution = snake_column_contribution(t, part, part.snake_of(t.live().front()));
    return out;
}

// Constant sum vectors: scan quadruples, slither-only-D ones first.
PeriodConstruction constant_sum(int k)
{
    std::vector<FeasibleQuadruple> quads = feasible_quadruples(k);
    std::stable_partition(quads.begin(), quads.end(), [](const FeasibleQuadruple& q) { return q.beta_E == 0; });
    for (const auto& q : quads) {
        const auto ws = necklaces('D', q.beta_D, 'E', q.beta_E);
        const auto wc = necklaces('S', q.alpha_S, 'L', q.alpha_L);
        for (const auto& a : ws)
            for (const auto& b : wc) {
                PeriodConstruction c = finish(1, k, {Slither(a), CoSlither(b)});
                if (c.sums.lambda == 1)
                    return c;
            }
    }
    throw TheoremViolation("no orbit with constant sum vector for n = " + std::to_string(k));
}

} // namespace

PeriodConstruction construct_period_lambda(int lambda, int k)
{
    if (k < 4)
        throw InputError("multiplier k must be at least 4, got " + std::to_string(k));
    if (lambda == 1)
        return constant_sum(k);
    PeriodConstruction c = finish(lambda, k, period_lambda_pair(lambda, k));
    if (c.sums.lambda != lambda)
        throw TheoremViolation("construction for lambda = " + std::to_string(lambda) + ", k = " +
                               std::to_string(k) + " has period " + std::to_string(c.sums.lambda));
    return c;
}

} // namespace snakes
