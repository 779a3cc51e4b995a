#include "snakes/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "snakes/errors.hpp"

namespace snakes {

std::vector<std::int64_t> smith_diagonal(IntMatrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& r : m)
        if (r.size() != cols)
            throw InputError("ragged relation matrix");

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // Bring the smallest nonzero entry of the remaining block to (t, t).
        while (true) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                break;
            std::swap(m[t], m[pr]);
            for (auto& r : m)
                std::swap(r[t], r[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const std::int64_t f = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= f * m[t][j];
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const std::int64_t f = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= f * m[i][t];
                clean = clean && m[t][j] == 0;
            }
            if (!clean)
                continue;
            // The pivot must divide the rest of the block; fold in a row if not.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            m[t][k] += m[i][k];
                        divides = false;
                    }
            if (divides)
                break;
        }
    }
    std::vector<std::int64_t> diag(steps);
    for (std::size_t t = 0; t < steps; ++t)
        diag[t] = std::llabs(m[t][t]);
    return diag;
}

GroupInvariants invariants_of_relations(const IntMatrix& rows)
{
    for (const auto& r : rows)
        if (r.size() != 2)
            throw InputError("relations must have two columns");
    std::vector<std::int64_t> d = smith_diagonal(rows);
    d.resize(2, 0);
    return {d[0], d[1]};
}

GroupInvariants cyclic_product(std::int64_t a, std::int64_t b)
{
    if (a <= 0 || b <= 0)
        throw InputError("cyclic factors must be positive");
    const std::int64_t g = std::gcd(a, b);
    return {g, a / g * b};
}

} // namespace snakes
