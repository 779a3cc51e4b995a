#include "snakes/slither_calculus.hpp"

#include <numeric>

#include "snakes/cyclic_words.hpp"
#include "snakes/errors.hpp"

namespace snakes {

namespace {

int checked_count(const std::string& word, char a, char b, const char* kind)
{
    int na = 0;
    for (char c : word) {
        if (c == a)
            ++na;
        else if (c != b)
            throw InputError(std::string(kind) + " '" + word + "' may only use " + a + " and " + b);
    }
    if (word.empty())
        throw InputError(std::string(kind) + " must be nonempty");
    return na;
}

} // namespace

Slither::Slither(std::string word) : word_(std::move(word)), d_(checked_count(word_, 'D', 'E', "slither")) {}

CoSlither::CoSlither(std::string word)
    : word_(std::move(word)), s_(checked_count(word_, 'S', 'L', "co-slither"))
{
}

std::string Slither::canonical() const { return cyclic::canonical(word_); }
std::string CoSlither::canonical() const { return cyclic::canonical(word_); }

IndependentSet analysis_row(const IndependentSet& row)
{
    const int n = row.size();
    int first = 0;
    for (int k = 1; k <= n && !first; ++k)
        if (row.at(k))
            first = k;
    if (!first)
        throw InputError("row '" + row.str() + "' has no live entry");
    if (first == 1)
        return row;
    // Continue into the next orbit row, as the tape does.
    const IndependentSet next = sweep(row);
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(n));
    for (int k = first; k <= n; ++k)
        bits.push_back(row.at(k));
    for (int k = 1; k < first; ++k)
        bits.push_back(next.at(k));
    return IndependentSet(std::move(bits));
}

ZeroBlocks zero_blocks(const IndependentSet& input)
{
    const IndependentSet row = analysis_row(input);
    const int n = row.size();
    ZeroBlocks out;
    int last = 1;
    for (int k = 2; k <= n; ++k) {
        if (!row.at(k))
            continue;
        out.inner.push_back({last + 1, k - last - 1});
        last = k;
    }
    out.trailing = {last + 1, n - last};
    return out;
}

Slither slither_from_row(const IndependentSet& row)
{
    const ZeroBlocks blocks = zero_blocks(row);
    std::string w;
    for (const auto& b : blocks.inner) {
        if (b.length == 1) {
            w += 'E';
        } else {
            w += 'D';
            w.append(static_cast<std::size_t>(b.length / 2 - 1), 'E');
            w += 'D';
        }
    }
    w += 'D';
    w.append(static_cast<std::size_t>((blocks.trailing.length - 1) / 2), 'E');
    return Slither(std::move(w));
}

CoSlither coslither_from_row(const IndependentSet& row)
{
    const ZeroBlocks blocks = zero_blocks(row);
    std::string w;
    w += blocks.trailing.length % 2 ? 'S' : 'L';
    for (auto it = blocks.inner.rbegin(); it != blocks.inner.rend(); ++it)
        if (it->length > 1)
            w += it->length % 2 ? 'L' : 'S';
    return CoSlither(std::move(w));
}

std::string primitive_block(const std::string& w)
{
    return w.substr(0, cyclic::primitive_period(w));
}

int degree(const Slither& w)
{
    return w.length() / static_cast<int>(cyclic::primitive_period(w.word()));
}

int codegree(const CoSlither& w)
{
    return w.length() / static_cast<int>(cyclic::primitive_period(w.word()));
}

ScrollMetrics metrics_from_words(const Slither& ws, const CoSlither& wc, int n)
{
    const std::int64_t from_slither = 2LL * ws.beta_E() + (n + 1LL) * ws.beta_D();
    const std::int64_t from_coslither = (2LL * n - 1) * wc.alpha_S() + (2LL * n - 2) * wc.alpha_L();
    if (from_slither != from_coslither)
        throw ConsistencyError("scale from slither " + std::to_string(from_slither) +
                               " differs from scale from co-slither " + std::to_string(from_coslither));
    ScrollMetrics m;
    m.sigma = from_slither;
    m.deg = degree(ws);
    m.codeg = codegree(wc);
    if (m.sigma % (m.deg * m.codeg) != 0)
        throw ConsistencyError("degree times codegree does not divide the scale");
    m.p = m.sigma / m.deg;
    m.q = m.sigma / m.codeg;
    m.T_tape = std::gcd(m.p, m.q);
    if (m.T_tape != m.sigma / (m.deg * m.codeg))
        throw ConsistencyError("tape period forms disagree");
    m.T_scroll = std::lcm(m.T_tape, static_cast<std::int64_t>(n)) / n;
    return m;
}

namespace {

ScrollAnalysis analyze_impl(const Scroll& s)
{
    const TapeIndex start = s.first_live();
    std::vector<std::uint8_t> bits;
    for (TapeIndex k = start; k < start + s.n(); ++k)
        bits.push_back(s.at(k));
    IndependentSet row(std::move(bits));
    Slither ws = slither_from_row(row);
    CoSlither wc = coslither_from_row(row);
    ScrollMetrics m = metrics_from_words(ws, wc, s.n());
    return ScrollAnalysis{start,
                          std::move(row),
                          std::move(ws),
                          std::move(wc),
                          m,
                          walk_slither(s, start),
                          s.tape().period(),
                          s.m()};
}

} // namespace

ScrollAnalysis analyze(const Scroll& s)
{
    return analyze_impl(s);
}

ScrollMetrics metrics(const Scroll& s)
{
    const ScrollAnalysis a = analyze_impl(s);
    if (a.metrics.T_scroll != s.m())
        throw TheoremViolation("scroll period " + std::to_string(a.metrics.T_scroll) +
                               " differs from orbit length " + std::to_string(s.m()));
    if (a.metrics.T_tape != a.simulated_period)
        throw TheoremViolation("tape period " + std::to_string(a.metrics.T_tape) +
                               " differs from simulated period " + std::to_string(a.simulated_period));
    return a.metrics;
}

} // namespace snakes
