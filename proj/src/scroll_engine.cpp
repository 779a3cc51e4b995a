#include "snakes/scroll_engine.hpp"

#include <algorithm>
#include <string>

#include "snakes/cyclic_words.hpp"
#include "snakes/errors.hpp"

namespace snakes {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) noexcept
{
    std::int64_t r = a % b;
    return r < 0 ? r + b : r;
}

std::int64_t least_period(const std::vector<std::uint8_t>& v)
{
    const std::size_t len = v.size();
    std::vector<std::size_t> pi(len, 0);
    for (std::size_t i = 1; i < len; ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && v[i] != v[k])
            k = pi[k - 1];
        if (v[i] == v[k])
            ++k;
        pi[i] = k;
    }
    const std::size_t p = len - pi[len - 1];
    return static_cast<std::int64_t>(len % p == 0 ? p : len);
}

std::string live_message(const char* what, TapeIndex t)
{
    return std::string(what) + ": tape index " + std::to_string(t) + " is not live";
}

} // namespace

TapeIndex to_index(LiveEntry e, int n) noexcept
{
    return e.row * n + e.col;
}

LiveEntry to_entry(TapeIndex k, int n) noexcept
{
    const std::int64_t row = floor_div(k - 1, n);
    return {row, static_cast<int>(k - row * n)};
}

LiveEntry project(UniversalCoordinate u, int n) noexcept
{
    return to_entry(u.row * n + u.col, n);
}

UniversalCoordinate lift(LiveEntry e, std::int64_t sheet, int n) noexcept
{
    return {e.row - sheet, e.col + sheet * n};
}

TickerTape::TickerTape(int n, std::vector<std::uint8_t> fundamental)
    : n_(n), cells_(std::move(fundamental)), period_(0)
{
    if (cells_.empty() || cells_.size() % static_cast<std::size_t>(n) != 0)
        throw InputError("tape length must be a positive multiple of n");
    period_ = least_period(cells_);
}

bool TickerTape::at(TapeIndex k) const noexcept
{
    return cells_[static_cast<std::size_t>(mod(k - 1, length()))] != 0;
}

std::string TickerTape::str() const
{
    std::string out;
    out.reserve(cells_.size());
    for (auto c : cells_)
        out.push_back(c ? '1' : '0');
    return out;
}

std::string TickerTape::canonical() const
{
    return cyclic::canonical(str().substr(0, static_cast<std::size_t>(period_)));
}

namespace {

std::vector<std::uint8_t> flatten(const Orbit& o)
{
    std::vector<std::uint8_t> out;
    for (const auto& row : o.rows)
        out.insert(out.end(), row.bits().begin(), row.bits().end());
    return out;
}

} // namespace

Scroll::Scroll(Orbit base) : n_(base.n()), base_(std::move(base)), tape_(n_, flatten(base_)) {}

bool Scroll::at(std::int64_t row, std::int64_t col) const noexcept
{
    return tape_.at(row * n_ + col);
}

std::vector<TapeIndex> Scroll::live_between(TapeIndex lo, TapeIndex hi) const
{
    std::vector<TapeIndex> out;
    for (TapeIndex k = lo; k <= hi; ++k)
        if (at(k))
            out.push_back(k);
    return out;
}

TapeIndex Scroll::first_live() const
{
    for (TapeIndex k = 1; k <= tape_.length(); ++k)
        if (at(k))
            return k;
    throw InputError("orbit has no live entries");
}

Scroll scroll_from_seed(const IndependentSet& seed)
{
    return Scroll(orbit(seed));
}

std::int64_t tape_advance(Step step, int n) noexcept
{
    switch (step) {
    case Step::D: return n + 1;
    case Step::E: return 2;
    case Step::S: return 2 * static_cast<std::int64_t>(n) - 1;
    case Step::L: return 2 * static_cast<std::int64_t>(n) - 2;
    }
    return 0;
}

namespace {

// The unique live candidate among t+a and t+b; exactly one must be live.
Step pick(const Scroll& s, TapeIndex t, Step first, Step second, const char* what)
{
    if (!s.at(t))
        throw InputError(live_message(what, t));
    const bool a = s.at(t + tape_advance(first, s.n()));
    const bool b = s.at(t + tape_advance(second, s.n()));
    if (a == b)
        throw ConsistencyError(std::string(what) + " of " + std::to_string(t) + ": " +
                               (a ? "both" : "neither") + " candidates live");
    return a ? first : second;
}

} // namespace

Step successor_step(const Scroll& s, TapeIndex t)
{
    return pick(s, t, Step::E, Step::D, "successor");
}

Step co_successor_step(const Scroll& s, TapeIndex t)
{
    return pick(s, t, Step::L, Step::S, "co-successor");
}

TapeIndex successor(const Scroll& s, TapeIndex t)
{
    return t + tape_advance(successor_step(s, t), s.n());
}

TapeIndex co_successor(const Scroll& s, TapeIndex t)
{
    return t + tape_advance(co_successor_step(s, t), s.n());
}

namespace {

TapeIndex unique_preimage(const Scroll& s, TapeIndex t, Step first, Step second,
                          TapeIndex (*forward)(const Scroll&, TapeIndex), const char* what)
{
    if (!s.at(t))
        throw InputError(live_message(what, t));
    int found = 0;
    TapeIndex result = 0;
    for (Step st : {first, second}) {
        const TapeIndex u = t - tape_advance(st, s.n());
        if (s.at(u) && forward(s, u) == t) {
            ++found;
            result = u;
        }
    }
    if (found != 1)
        throw ConsistencyError(std::string(what) + " of " + std::to_string(t) + ": " +
                               std::to_string(found) + " preimages");
    return result;
}

} // namespace

TapeIndex predecessor(const Scroll& s, TapeIndex t)
{
    return unique_preimage(s, t, Step::E, Step::D, &successor, "predecessor");
}

TapeIndex co_predecessor(const Scroll& s, TapeIndex t)
{
    return unique_preimage(s, t, Step::L, Step::S, &co_successor, "co-predecessor");
}

SlitherWalk walk_slither(const Scroll& s, TapeIndex start)
{
    if (!s.at(start))
        throw InputError(live_message("slither walk", start));
    SlitherWalk w;
    w.start = start;
    TapeIndex pos = start;
    TapeIndex co = start;  // runs along the co-snake of start
    // Guard against a broken tape; real walks are far shorter.
    const std::int64_t limit = 2 * s.n() * s.tape().length();
    while (true) {
        const Step st = successor_step(s, pos);
        w.slither.push_back(static_cast<char>(st));
        pos += tape_advance(st, s.n());
        while (co < pos) {
            const Step ct = co_successor_step(s, co);
            w.co_slither.push_back(static_cast<char>(ct));
            co += tape_advance(ct, s.n());
        }
        if (co == pos)
            break;
        if (static_cast<std::int64_t>(w.slither.size()) > limit)
            throw ConsistencyError("successor walk never met its own co-snake");
    }
    w.beta = static_cast<std::int64_t>(w.slither.size());
    w.alpha = static_cast<std::int64_t>(w.co_slither.size());
    w.sigma = pos - start;
    return w;
}

long SnakePartition::position(TapeIndex t) const
{
    const TapeIndex r = mod(t, sigma);
    auto it = std::lower_bound(window.begin(), window.end(), r);
    if (it == window.end() || *it != r)
        return -1;
    return static_cast<long>(it - window.begin());
}

int SnakePartition::snake_of(TapeIndex t) const
{
    const long p = position(t);
    if (p < 0)
        throw InputError(live_message("snake label", t));
    return snake_label[static_cast<std::size_t>(p)];
}

int SnakePartition::cosnake_of(TapeIndex t) const
{
    const long p = position(t);
    if (p < 0)
        throw InputError(live_message("co-snake label", t));
    return cosnake_label[static_cast<std::size_t>(p)];
}

SnakePartition snakes_and_cosnakes(const Scroll& s)
{
    return snakes_and_cosnakes(s, walk_slither(s, s.first_live()).sigma);
}

SnakePartition snakes_and_cosnakes(const Scroll& s, std::int64_t sigma)
{
    if (sigma <= 0)
        throw InputError("scale must be positive");
    SnakePartition part;
    part.sigma = sigma;
    // Shifting by sigma maps every snake and co-snake to itself, so residues
    // mod sigma label them faithfully.
    part.window = s.live_between(0, sigma - 1);
    if (part.window.empty())
        throw InputError("orbit has no live entries");
    const std::size_t size = part.window.size();

    auto label_cycles = [&](TapeIndex (*step)(const Scroll&, TapeIndex), std::vector<int>& label) {
        label.assign(size, -1);
        int next = 0;
        for (std::size_t i = 0; i < size; ++i) {
            if (label[i] >= 0)
                continue;
            std::size_t j = i;
            while (label[j] < 0) {
                label[j] = next;
                const long p = part.position(step(s, part.window[j]));
                if (p < 0)
                    throw ConsistencyError("step left the live set");
                j = static_cast<std::size_t>(p);
            }
            if (label[j] != next)
                throw ConsistencyError("step is not a permutation of the window");
            ++next;
        }
        return next;
    };
    part.alpha = label_cycles(&successor, part.snake_label);
    part.beta = label_cycles(&co_successor, part.cosnake_label);
    return part;
}

bool same_fiber(TapeIndex a, TapeIndex b, const SnakePartition& part)
{
    return mod(a - b, part.sigma) == 0;
}

std::vector<TapeIndex> fiber(const Scroll& s, TapeIndex t, const SnakePartition& part,
                             TapeIndex lo, TapeIndex hi)
{
    if (!s.at(t))
        throw InputError(live_message("fiber", t));
    std::vector<TapeIndex> out;
    TapeIndex k = lo + mod(t - lo, part.sigma);
    for (; k <= hi; k += part.sigma)
        out.push_back(k);
    return out;
}

} // namespace snakes
