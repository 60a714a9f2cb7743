#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the closure, enumeration, or membership code under test.

#include <cstdint>
#include <vector>

#include "ideal_forge/ring.hpp"

namespace ideal_forge::oracle {

/// Direct check of the ideal definition over raw tables.
inline bool subset_is_ideal(const FiniteRing& r, std::uint64_t mask)
{
    const auto n = static_cast<Element>(r.order());
    auto in = [&](Element e) { return (mask >> e) & 1U; };
    if (mask == 0)
        return false;
    for (Element x = 0; x < n; ++x) {
        if (!in(x))
            continue;
        for (Element y = 0; y < n; ++y) {
            if (in(y)) {
                // x - y: find z with y + z = x
                Element z = 0;
                while (r.add(y, z) != x)
                    ++z;
                if (!in(z))
                    return false;
            }
            if (!in(r.mul(x, y)) || !in(r.mul(y, x)))
                return false;
        }
    }
    return true;
}

/// All ideals by filtering the full power set, as masks in ascending order.
inline std::vector<std::uint64_t> power_set_ideals(const FiniteRing& r)
{
    std::vector<std::uint64_t> out;
    const std::uint64_t limit = std::uint64_t{1} << r.order();
    for (std::uint64_t mask = 1; mask < limit; ++mask)
        if (subset_is_ideal(r, mask))
            out.push_back(mask);
    return out;
}

/// Smallest ideal containing gens: intersection of all power-set ideals above it.
inline std::uint64_t smallest_ideal_containing(const FiniteRing& r, std::uint64_t gens)
{
    std::uint64_t best = (r.order() >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << r.order()) - 1;
    for (std::uint64_t m : power_set_ideals(r))
        if ((gens & ~m) == 0)
            best &= m;
    return best;
}

/// (u, v) = n(a, b) + (a c x, b d y) by scanning n, x, y in [-window, window].
inline bool zz_member_window(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t u,
                             std::int64_t v, std::int64_t window)
{
    for (std::int64_t n = -window; n <= window; ++n)
        for (std::int64_t x = -window; x <= window; ++x) {
            if (n * a + a * c * x != u)
                continue;
            for (std::int64_t y = -window; y <= window; ++y)
                if (n * b + b * d * y == v)
                    return true;
        }
    return false;
}

} // namespace ideal_forge::oracle
