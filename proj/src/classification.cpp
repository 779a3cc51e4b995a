#include "snakes/classification.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "snakes/cyclic_words.hpp"
#include "snakes/errors.hpp"

namespace snakes {

bool is_feasible(const FeasibleQuadruple& q, int n) noexcept
{
    return q.beta_E >= 0 && q.alpha_S >= 0 && q.alpha_L >= 0 && q.alpha_S + q.alpha_L > 0 &&
           q.beta_D == 2 * (q.alpha_S + q.alpha_L) - 1 &&
           2 * q.beta_E + 3 * q.alpha_S + 4 * q.alpha_L == n + 1;
}

FeasibleQuadruple FeasiblePair::quadruple() const
{
    return {slither.beta_E(), co_slither.alpha_S(), co_slither.alpha_L(), slither.beta_D()};
}

std::vector<FeasibleQuadruple> feasible_quadruples(CycleSize n)
{
    const int target = n.value() + 1;
    std::vector<FeasibleQuadruple> out;
    for (int s = 0; 3 * s <= target; ++s)
        for (int e = (target - 3 * s) / 2; e >= 0; --e) {
            const int rest = target - 2 * e - 3 * s;
            if (rest % 4 != 0 || s + rest / 4 == 0)
                continue;
            const int l = rest / 4;
            out.push_back({e, s, l, 2 * (s + l) - 1});
        }
    return out;
}

std::int64_t gf_count(CycleSize n)
{
    const int top = n.value() + 1;
    // a[k]: coefficient of x^k in 1/((1-x^3)(1-x^4)), built part by part.
    std::vector<std::int64_t> a(static_cast<std::size_t>(top) + 1, 0);
    a[0] = 1;
    for (int part : {3, 4})
        for (int k = part; k <= top; ++k)
            a[k] += a[k - part];
    a[0] -= 1;
    std::vector<std::int64_t> b(a);
    for (int k = 2; k <= top; ++k)
        b[k] += b[k - 2];
    return b[top];
}

std::vector<std::string> necklaces(char a, int count_a, char b, int count_b)
{
    if (count_a < 0 || count_b < 0 || count_a + count_b == 0)
        throw InputError("necklace letter counts must be nonnegative with a positive total");
    std::string w(static_cast<std::size_t>(count_a), a);
    w.append(static_cast<std::size_t>(count_b), b);
    auto rank_less = [](char x, char y) { return cyclic::letter_rank(x) < cyclic::letter_rank(y); };
    std::sort(w.begin(), w.end(), rank_less);
    std::vector<std::string> out;
    do {
        if (cyclic::canonical(w) == w)
            out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end(), rank_less));
    return out;
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::int64_t totient(std::int64_t d)
{
    std::int64_t r = d;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % p)
            continue;
        while (d % p == 0)
            d /= p;
        r -= r / p;
    }
    if (d > 1)
        r -= r / d;
    return r;
}

} // namespace

std::int64_t necklace_count(int count_a, int count_b)
{
    const std::int64_t total = count_a + count_b;
    if (total <= 0)
        return 0;
    const std::int64_t g = std::gcd(count_a, count_b);
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d <= g; ++d)
        if (g % d == 0)
            sum += totient(d) * binomial(total / d, count_a / d);
    return sum / total;
}

namespace {

struct Token {
    int r = 0;          // number of E letters inside the token
    bool single_e = false;
};

// Parse w as (E | D E^r D)* D E^t. Returns false when w does not fit.
bool tokenize(const std::string& w, std::vector<Token>& inner, int& trailing_r)
{
    inner.clear();
    std::size_t i = 0;
    const std::size_t len = w.size();
    while (i < len) {
        if (w[i] == 'E') {
            inner.push_back({0, true});
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < len && w[j] == 'E')
            ++j;
        if (j == len) {
            trailing_r = static_cast<int>(j - i - 1);
            return true;
        }
        inner.push_back({static_cast<int>(j - i - 1), false});
        i = j + 1;
    }
    return false;
}

} // namespace

FirstRow construct_first_row_detailed(const FeasiblePair& pair, CycleSize n)
{
    const FeasibleQuadruple q = pair.quadruple();
    if (!is_feasible(q, n.value()))
        throw InputError("slither " + pair.slither.word() + " and co-slither " + pair.co_slither.word() +
                         " are not a feasible pair for n = " + std::to_string(n.value()));

    // An odd number of D letters always parses from the first letter, so the
    // search below stops at rotation 0 for feasible input.
    const std::string& ws = pair.slither.word();
    std::vector<Token> inner;
    int trailing_r = 0;
    int rotation = -1;
    for (std::size_t d = 0; d < ws.size(); ++d)
        if (tokenize(cyclic::rotate_left(ws, d), inner, trailing_r)) {
            rotation = static_cast<int>(d);
            break;
        }
    if (rotation < 0)
        throw InputError("slither " + ws + " has no rotation of the form (E | DE*D)* DE*");

    const std::string& wc = pair.co_slither.word();
    std::size_t wide = 0;
    for (const auto& t : inner)
        wide += t.single_e ? 0 : 1;
    if (wide + 1 != wc.size())
        throw ConsistencyError("co-slither length does not match the slither's D tokens");

    std::vector<int> gaps(inner.size(), 1);
    std::size_t next = 1;
    for (std::size_t k = inner.size(); k-- > 0;) {
        if (inner[k].single_e)
            continue;
        gaps[k] = 2 * inner[k].r + (wc[next++] == 'S' ? 2 : 3);
    }
    const int trailing = 2 * trailing_r + (wc[0] == 'S' ? 1 : 2);

    std::vector<std::uint8_t> bits{1};
    for (int z : gaps) {
        bits.insert(bits.end(), static_cast<std::size_t>(z), 0);
        bits.push_back(1);
    }
    bits.insert(bits.end(), static_cast<std::size_t>(trailing), 0);
    if (static_cast<int>(bits.size()) != n.value())
        throw ConsistencyError("constructed row has length " + std::to_string(bits.size()) + ", expected " +
                               std::to_string(n.value()));
    return {IndependentSet(std::move(bits)), rotation};
}

IndependentSet construct_first_row(const FeasiblePair& pair, CycleSize n)
{
    return construct_first_row_detailed(pair, n).row;
}

std::string tape_canonical_of(const IndependentSet& row)
{
    return scroll_from_seed(row).tape().canonical();
}

Classification enumerate_ticker_tapes(CycleSize n)
{
    Classification out;
    out.n = n.value();
    std::set<std::string> seen;
    for (const auto& q : feasible_quadruples(n)) {
        QuadrupleSummary summary{q, necklaces('D', q.beta_D, 'E', q.beta_E),
                                 necklaces('S', q.alpha_S, 'L', q.alpha_L)};
        for (const auto& ws : summary.slither_necklaces)
            for (const auto& wc : summary.co_slither_necklaces) {
                const FeasiblePair pair{Slither(ws), CoSlither(wc)};
                IndependentSet row = construct_first_row(pair, n);
                if (!cyclic::is_rotation(slither_from_row(row).word(), ws) ||
                    !cyclic::is_rotation(coslither_from_row(row).word(), wc))
                    throw TheoremViolation("row " + row.str() + " does not reproduce " + ws + "/" + wc);
                std::string canon = tape_canonical_of(row);
                seen.insert(canon);
                out.tapes.push_back({q, ws, wc, std::move(row), std::move(canon)});
                ++out.necklace_pairs;
            }
        out.quadruples.push_back(std::move(summary));
    }
    out.distinct_tapes = static_cast<std::int64_t>(seen.size());
    if (out.distinct_tapes != out.necklace_pairs)
        throw TheoremViolation(std::to_string(out.necklace_pairs) + " necklace pairs gave " +
                               std::to_string(out.distinct_tapes) + " distinct tapes for n = " +
                               std::to_string(out.n));
    return out;
}

} // namespace snakes
