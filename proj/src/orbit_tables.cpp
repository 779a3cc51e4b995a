#include "snakes/orbit_tables.hpp"

#include <algorithm>
#include <numeric>

#include "snakes/errors.hpp"

namespace snakes {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t b) noexcept
{
    std::int64_t r = a % b;
    return r < 0 ? r + b : r;
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

OrbitTable::OrbitTable(const Scroll& scroll, int omega) : scroll_(scroll), omega_(omega), r_(0)
{
    if (omega < 1)
        throw InputError("frequency must be at least 1, got " + std::to_string(omega));
    r_ = omega * scroll_.m();
    live_ = scroll_.live_between(1, size());
}

bool OrbitTable::at(std::int64_t row, int col) const noexcept
{
    return scroll_.at(mod(row, r_), col);
}

TapeIndex OrbitTable::reduce(TapeIndex k) const noexcept
{
    return mod(k - 1, size()) + 1;
}

long OrbitTable::position(TapeIndex k) const
{
    const TapeIndex r = reduce(k);
    auto it = std::lower_bound(live_.begin(), live_.end(), r);
    if (it == live_.end() || *it != r)
        return -1;
    return static_cast<long>(it - live_.begin());
}

TapeIndex OrbitTable::s_bar(TapeIndex k) const
{
    return reduce(successor(scroll_, reduce(k)));
}

TapeIndex OrbitTable::c_bar(TapeIndex k) const
{
    return reduce(co_successor(scroll_, reduce(k)));
}

std::vector<std::string> OrbitTable::rows() const
{
    std::vector<std::string> out;
    for (std::int64_t i = 0; i < r_; ++i) {
        std::string row;
        for (int j = 1; j <= n(); ++j)
            row.push_back(at(i, j) ? '1' : '0');
        out.push_back(std::move(row));
    }
    return out;
}

OrbitTable omega_table(const Scroll& s, int omega)
{
    return OrbitTable(s, omega);
}

OuroborosPartition ouroboros_partition(const OrbitTable& t)
{
    const auto& live = t.live();
    if (live.empty())
        throw InputError("orbit table has no live entries");

    auto components = [&](TapeIndex (OrbitTable::*step)(TapeIndex) const, std::vector<int>& label) {
        DisjointSets ds(live.size());
        for (std::size_t i = 0; i < live.size(); ++i) {
            const long j = t.position((t.*step)(live[i]));
            if (j < 0)
                throw ConsistencyError("table step left the live set");
            ds.unite(i, static_cast<std::size_t>(j));
        }
        std::vector<int> root_label(live.size(), -1);
        label.assign(live.size(), -1);
        int next = 0;
        for (std::size_t i = 0; i < live.size(); ++i) {
            int& rl = root_label[ds.find(i)];
            if (rl < 0)
                rl = next++;
            label[i] = rl;
        }
        return next;
    };

    OuroborosPartition op;
    op.bar_alpha = components(&OrbitTable::s_bar, op.ouro_label);
    op.bar_beta = components(&OrbitTable::c_bar, op.co_ouro_label);
    return op;
}

FundamentalDegrees fundamental_degrees(const Scroll& s)
{
    const SnakePartition part = snakes_and_cosnakes(s);
    const OuroborosPartition op = ouroboros_partition(OrbitTable(s, 1));
    if (part.alpha % op.bar_alpha != 0 || part.beta % op.bar_beta != 0)
        throw ConsistencyError("ouroboros counts do not divide snake counts");
    return {part.alpha / op.bar_alpha, part.beta / op.bar_beta};
}

OuroborosCounts predicted_counts(const Scroll& s, int omega)
{
    if (omega < 1)
        throw InputError("frequency must be at least 1");
    const OuroborosPartition op = ouroboros_partition(OrbitTable(s, 1));
    const FundamentalDegrees fd = fundamental_degrees(s);
    return {op.bar_alpha * std::gcd(fd.deg_p1, static_cast<std::int64_t>(omega)),
            op.bar_beta * std::gcd(fd.codeg_p1, static_cast<std::int64_t>(omega))};
}

namespace {

SwallowPermutation swallow_generic(const OrbitTable& t, int count, int (SnakePartition::*label_of)(TapeIndex) const,
                                   const SnakePartition& part, TapeIndex (*order_step)(const Scroll&, TapeIndex),
                                   TapeIndex (*wrap_step)(const Scroll&, TapeIndex))
{
    const Scroll& s = t.scroll();
    std::vector<TapeIndex> tail(static_cast<std::size_t>(count), 0), head(static_cast<std::size_t>(count), 0);
    for (TapeIndex k : t.live()) {
        const auto l = static_cast<std::size_t>((part.*label_of)(k));
        if (tail[l] == 0)
            tail[l] = k;
        head[l] = k;
    }
    for (int l = 0; l < count; ++l)
        if (tail[static_cast<std::size_t>(l)] == 0)
            throw ConsistencyError("a label has no entry in the orbit table");

    std::vector<int> order, pos(static_cast<std::size_t>(count), -1);
    int l = (part.*label_of)(t.live().front());
    for (int i = 0; i < count; ++i) {
        if (pos[static_cast<std::size_t>(l)] >= 0)
            throw ConsistencyError("label order does not visit every label once");
        pos[static_cast<std::size_t>(l)] = i;
        order.push_back(l);
        l = (part.*label_of)(order_step(s, tail[static_cast<std::size_t>(l)]));
    }
    if (l != order.front())
        throw ConsistencyError("label order does not close up");

    SwallowPermutation sw;
    for (int i = 0; i < count; ++i) {
        const auto li = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
        sw.tails.push_back(tail[li]);
        sw.heads.push_back(head[li]);
        const TapeIndex next = wrap_step(s, head[li]) - t.size();
        sw.image.push_back(pos[static_cast<std::size_t>((part.*label_of)(next))]);
    }
    sw.shift = sw.image[0];
    sw.uniform = true;
    for (int i = 0; i < count; ++i)
        sw.uniform = sw.uniform && sw.image[static_cast<std::size_t>(i)] == (i + sw.shift) % count;

    std::vector<char> done(static_cast<std::size_t>(count), 0);
    for (int i = 0; i < count; ++i) {
        if (done[static_cast<std::size_t>(i)])
            continue;
        std::vector<int> cyc;
        for (int j = i; !done[static_cast<std::size_t>(j)]; j = sw.image[static_cast<std::size_t>(j)]) {
            done[static_cast<std::size_t>(j)] = 1;
            cyc.push_back(j);
        }
        sw.cycles.push_back(std::move(cyc));
    }
    return sw;
}

} // namespace

SwallowPermutation swallow(const OrbitTable& t, const SnakePartition& part)
{
    return swallow_generic(t, part.alpha, &SnakePartition::snake_of, part, &co_successor, &successor);
}

SwallowPermutation co_swallow(const OrbitTable& t, const SnakePartition& part)
{
    return swallow_generic(t, part.beta, &SnakePartition::cosnake_of, part, &successor, &co_successor);
}

GroupInvariants group_invariants(const OrbitTable& t, const OuroborosPartition& op, int alpha, int beta)
{
    const std::int64_t eta = t.eta();
    if (eta % op.bar_alpha != 0 || eta % op.bar_beta != 0)
        throw ConsistencyError("ouroboroi do not have equal lengths");
    return invariants_of_relations({{beta, -static_cast<std::int64_t>(alpha)},
                                    {eta / op.bar_alpha, 0},
                                    {0, eta / op.bar_beta}});
}

SimulatedGroup simulated_group(const OrbitTable& t, const OuroborosPartition& op)
{
    SimulatedGroup g;
    const TapeIndex x = t.live().front();
    const int x_ouro = op.ouro_label.front();

    TapeIndex y = t.s_bar(x);
    g.s_order = 1;
    while (y != x) {
        y = t.s_bar(y);
        ++g.s_order;
    }

    TapeIndex z = t.c_bar(x);
    g.c_step = 1;
    while (op.ouro_label[static_cast<std::size_t>(t.position(z))] != x_ouro) {
        z = t.c_bar(z);
        ++g.c_step;
    }
    g.offset = 0;
    while (z != x) {
        z = t.s_bar(z);
        ++g.offset;
        if (g.offset > g.s_order)
            throw ConsistencyError("co-successor landed on the ouroboros but never returns");
    }
    g.invariants = invariants_of_relations({{g.s_order, 0}, {g.offset, g.c_step}});

    // (a, b) in [0, s_order) x [0, c_step) must hit every live entry once.
    std::vector<char> hit(t.live().size(), 0);
    std::int64_t hits = 0;
    bool repeat = false;
    TapeIndex row_start = x;
    for (std::int64_t b = 0; b < g.c_step; ++b) {
        TapeIndex w = row_start;
        for (std::int64_t a = 0; a < g.s_order; ++a) {
            const auto p = static_cast<std::size_t>(t.position(w));
            repeat = repeat || hit[p];
            hit[p] = 1;
            ++hits;
            w = t.s_bar(w);
        }
        row_start = t.c_bar(row_start);
    }
    g.simply_transitive = !repeat && hits == t.eta();
    return g;
}

Slither table_slither(const OrbitTable& t, const OuroborosPartition& op)
{
    const TapeIndex x = t.live().front();
    const int target = op.co_ouro_label.front();
    std::string w;
    TapeIndex y = x;
    do {
        w.push_back(static_cast<char>(successor_step(t.scroll(), y)));
        y = t.s_bar(y);
    } while (op.co_ouro_label[static_cast<std::size_t>(t.position(y))] != target);
    return Slither(std::move(w));
}

CoSlither table_coslither(const OrbitTable& t, const OuroborosPartition& op)
{
    const TapeIndex x = t.live().front();
    const int target = op.ouro_label.front();
    std::string w;
    TapeIndex y = x;
    do {
        w.push_back(static_cast<char>(co_successor_step(t.scroll(), y)));
        y = t.c_bar(y);
    } while (op.ouro_label[static_cast<std::size_t>(t.position(y))] != target);
    return CoSlither(std::move(w));
}

bool ColorPreserving::agree() const noexcept
{
    return counts_match == swallows_identity && counts_match == labels_bijective &&
           counts_match == scale_divides && counts_match == degrees_divide;
}

ColorPreserving color_conditions(const OrbitTable& t, const SnakePartition& part, const OuroborosPartition& op,
                                 const SwallowPermutation& sw, const SwallowPermutation& csw,
                                 const FundamentalDegrees& fd)
{
    ColorPreserving c;
    c.counts_match = op.bar_alpha == part.alpha && op.bar_beta == part.beta;
    c.swallows_identity = sw.identity() && csw.identity();

    // Each ouroboros must carry a single snake label, and dually.
    std::vector<int> snake_of_ouro(static_cast<std::size_t>(op.bar_alpha), -1);
    std::vector<int> cosnake_of_coouro(static_cast<std::size_t>(op.bar_beta), -1);
    bool single = true;
    for (std::size_t i = 0; i < t.live().size(); ++i) {
        const int sl = part.snake_of(t.live()[i]);
        const int cl = part.cosnake_of(t.live()[i]);
        int& a = snake_of_ouro[static_cast<std::size_t>(op.ouro_label[i])];
        int& b = cosnake_of_coouro[static_cast<std::size_t>(op.co_ouro_label[i])];
        if (a < 0)
            a = sl;
        if (b < 0)
            b = cl;
        single = single && a == sl && b == cl;
    }
    c.labels_bijective = single;
    c.scale_divides = t.size() % part.sigma == 0;
    c.degrees_divide = t.omega() % (fd.deg_p1 * fd.codeg_p1) == 0;
    return c;
}

ColorPreserving is_color_preserving(const Scroll& s, int omega)
{
    const OrbitTable t(s, omega);
    const SnakePartition part = snakes_and_cosnakes(s);
    const OuroborosPartition op = ouroboros_partition(t);
    const ColorPreserving c =
        color_conditions(t, part, op, swallow(t, part), co_swallow(t, part), fundamental_degrees(s));
    if (!c.agree())
        throw TheoremViolation("color-preserving conditions disagree at frequency " + std::to_string(omega));
    return c;
}

} // namespace snakes
