#include "snakes/cyclic_words.hpp"

#include <algorithm>
#include <vector>

namespace snakes::cyclic {

int letter_rank(char c) noexcept
{
    switch (c) {
    case 'D': case 'S': case '0': return 0;
    case 'E': case 'L': case '1': return 1;
    default: return 2 + static_cast<unsigned char>(c);
    }
}

std::size_t least_rotation_start(std::string_view w)
{
    const std::size_t n = w.size();
    if (n == 0)
        return 0;
    std::vector<int> s(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        s[i] = letter_rank(w[i % n]);

    // Booth's failure-function scan over the doubled word.
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        long i = f[j - k - 1];
        while (i != -1 && s[j] != s[k + i + 1]) {
            if (s[j] < s[k + i + 1])
                k = j - i - 1;
            i = f[i];
        }
        if (i == -1 && s[j] != s[k + i + 1]) {
            if (s[j] < s[k + i + 1])
                k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

std::string rotate_left(std::string_view w, std::size_t d)
{
    if (w.empty())
        return {};
    d %= w.size();
    std::string out(w.substr(d));
    out.append(w.substr(0, d));
    return out;
}

std::string canonical(std::string_view w)
{
    return rotate_left(w, least_rotation_start(w));
}

bool is_rotation(std::string_view a, std::string_view b)
{
    return a.size() == b.size() && canonical(a) == canonical(b);
}

std::size_t primitive_period(std::string_view w)
{
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i)
            ok = w[i] == w[(i + d) % n];
        if (ok)
            return d;
    }
    return n;
}

std::string power(std::string_view w, std::size_t k)
{
    std::string out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i)
        out.append(w);
    return out;
}

std::size_t count(std::string_view w, char letter)
{
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), letter));
}

} // namespace snakes::cyclic
