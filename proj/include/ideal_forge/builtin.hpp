#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ideal_forge/ring.hpp"

namespace ideal_forge {

namespace detail {

inline RingTables modular_tables(std::size_t n, bool zero_product)
{
    RingTables t;
    t.order = n;
    for (std::size_t i = 0; i < n; ++i)
        t.labels.push_back(std::to_string(i));
    t.add.assign(n, std::vector<Element>(n));
    t.mul.assign(n, std::vector<Element>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            t.add[x][y] = static_cast<Element>((x + y) % n);
            t.mul[x][y] = zero_product ? 0 : static_cast<Element>((x * y) % n);
        }
    return t;
}

// Klein four-group 0,a,b,c with the zero multiplication.
inline RingTables kleinian_zero_tables()
{
    RingTables t;
    t.order = 4;
    t.labels = {"0", "a", "b", "c"};
    t.add = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    t.mul.assign(4, std::vector<Element>(4, 0));
    return t;
}

// GF(4) = GF(2)[w]/(w^2 + w + 1).
inline RingTables gf4_tables()
{
    RingTables t;
    t.order = 4;
    t.labels = {"0", "1", "w", "w+1"};
    t.add = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    t.mul = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    return t;
}

// Matrices [[p,q],[0,0]] over GF(2); element index 2p+q.
// [[p,q],[0,0]] * [[r,s],[0,0]] = [[pr,ps],[0,0]].
inline RingTables nc4_tables()
{
    RingTables t;
    t.order = 4;
    t.labels = {"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[1,0],[0,0]]", "[[1,1],[0,0]]"};
    t.add.assign(4, std::vector<Element>(4));
    t.mul.assign(4, std::vector<Element>(4));
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y) {
            Element p = x >> 1, r = y >> 1, s = y & 1;
            t.add[x][y] = x ^ y;
            t.mul[x][y] = static_cast<Element>(((p & r) << 1) | (p & s));
        }
    t.commutative = false;
    return t;
}

} // namespace detail

/// Names accepted by builtin_ring, in catalog order. gf2 and gf3 are aliases of z2 and z3.
inline const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names = {"z2",  "z3",  "z4",  "z5",            "z6",    "z8",    "gf2",
                                                   "gf3", "gf4", "kleinian-zero", "zero2", "zero4", "nc4"};
    return names;
}

inline bool is_builtin_name(std::string_view name)
{
    return std::ranges::find(builtin_names(), name) != builtin_names().end();
}

inline RingTables builtin_tables(std::string_view name)
{
    static constexpr std::array<std::pair<std::string_view, std::size_t>, 8> cyclic = {{
        {"z2", 2}, {"z3", 3}, {"z4", 4}, {"z5", 5}, {"z6", 6}, {"z8", 8}, {"gf2", 2}, {"gf3", 3},
    }};
    for (auto [n, order] : cyclic)
        if (n == name)
            return detail::modular_tables(order, false);
    if (name == "gf4")
        return detail::gf4_tables();
    if (name == "kleinian-zero")
        return detail::kleinian_zero_tables();
    if (name == "zero2")
        return detail::modular_tables(2, true);
    if (name == "zero4")
        return detail::modular_tables(4, true);
    if (name == "nc4")
        return detail::nc4_tables();
    throw CatalogError("unknown builtin ring '" + std::string(name) + "'");
}

inline RingPtr builtin_ring(std::string_view name)
{
    return build_ring(builtin_tables(name), std::string(name));
}

} // namespace ideal_forge
