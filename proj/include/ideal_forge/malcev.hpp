#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ideal_forge/parallel.hpp"
#include "ideal_forge/ring.hpp"

namespace ideal_forge {

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// t(x) = sum_{i=1..D} coeffs[i-1] x^i. There is no constant term.
struct UnaryPolynomial
{
    std::vector<std::int64_t> coeffs;

    std::size_t degree() const noexcept { return coeffs.size(); }

    UnaryPolynomial operator+(const UnaryPolynomial& o) const
    {
        UnaryPolynomial s{coeffs};
        if (s.coeffs.size() < o.coeffs.size())
            s.coeffs.resize(o.coeffs.size(), 0);
        for (std::size_t i = 0; i < o.coeffs.size(); ++i)
            s.coeffs[i] += o.coeffs[i];
        return s;
    }

    bool operator==(const UnaryPolynomial&) const = default;

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0)
                continue;
            if (!s.empty())
                s += " + ";
            if (coeffs[i] != 1)
                s += std::to_string(coeffs[i]);
            s += i == 0 ? "x" : "x^" + std::to_string(i + 1);
        }
        return s.empty() ? "0" : s;
    }
};

/// k * x by double-and-add over the addition table.
inline Element scalar_multiple(const FiniteRing& r, std::uint64_t k, Element x)
{
    Element acc = 0;
    for (Element base = x; k != 0; k >>= 1, base = r.add(base, base))
        if (k & 1U)
            acc = r.add(acc, base);
    return acc;
}

/// Least e >= 1 with e * x = 0 for every x (lcm of additive orders).
inline std::uint64_t additive_exponent(const FiniteRing& r)
{
    std::uint64_t e = 1;
    for (Element x = 0; x < r.order(); ++x) {
        std::uint64_t k = 1;
        for (Element y = x; y != 0; y = r.add(y, x))
            ++k;
        e = std::lcm(e, k);
    }
    return e;
}

/// sum b_i x^i with each b_i reduced modulo the additive exponent.
inline Element eval_poly(const FiniteRing& r, const UnaryPolynomial& p, Element x)
{
    if (x >= r.order())
        throw InputError("element index out of range");
    const auto e = static_cast<std::int64_t>(additive_exponent(r));
    Element acc = 0;
    Element power = x;
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        if (i > 0)
            power = r.mul(power, x);
        const std::int64_t b = ((p.coeffs[i] % e) + e) % e;
        acc = r.add(acc, scalar_multiple(r, static_cast<std::uint64_t>(b), power));
    }
    return acc;
}

/// x * t(x) = x for every element x.
inline bool satisfies_malcev(const FiniteRing& r, const UnaryPolynomial& p)
{
    for (Element x = 0; x < r.order(); ++x)
        if (r.mul(x, eval_poly(r, p, x)) != x)
            return false;
    return true;
}

/**
 * Degree beyond which no new polynomial functions appear. For each x the
 * powers x, x^2, ... are eventually periodic with some tail length and
 * period; with T the largest tail and L the lcm of the periods, x^(i+L) = x^i
 * for all x once i > T, so every unary polynomial function is realized in
 * degree at most T + L. Saturates at the uint64 maximum.
 */
inline std::uint64_t completeness_degree(const FiniteRing& r)
{
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t tail_max = 0, period_lcm = 1;
    for (Element x = 0; x < r.order(); ++x) {
        std::vector<int> seen(r.order(), -1);
        Element s = x;
        for (int i = 0;; ++i, s = r.mul(s, x)) {
            if (seen[s] >= 0) {
                tail_max = std::max<std::uint64_t>(tail_max, static_cast<std::uint64_t>(seen[s]));
                const auto period = static_cast<std::uint64_t>(i - seen[s]);
                const std::uint64_t g = std::gcd(period_lcm, period);
                period_lcm = period_lcm / g > kMax / period ? kMax : period_lcm / g * period;
                break;
            }
            seen[s] = i;
        }
    }
    return period_lcm > kMax - tail_max ? kMax : tail_max + period_lcm;
}

struct MalcevOptions
{
    std::optional<std::uint64_t> degree_bound;
    std::uint64_t search_cap = kDefaultSearchCap;
    unsigned jobs = 1;
};

struct MalcevSearchOutcome
{
    bool found = false;
    std::optional<UnaryPolynomial> witness;
    std::uint64_t searched_degree_bound = 0;
    std::uint64_t searched_coefficient_modulus = 0;
    /// The identity is checked anyway, but the characterization only covers commutative rings.
    bool noncommutative = false;
    /// True when the degree bound was the completeness degree, so "not found" is a proof.
    bool complete = false;
};

/**
 * Exhaustive search for t with x t(x) = x on every element. Coefficients
 * range over [0, e) where e is the additive exponent. Candidates are tried
 * by increasing degree, then lexicographically on (b_1, ..., b_D); the first
 * hit is returned and re-verified with satisfies_malcev.
 *
 * Throws CapExceeded if e^D exceeds opts.search_cap.
 */
inline MalcevSearchOutcome find_malcev(const FiniteRing& r, const MalcevOptions& opts = {})
{
    const std::uint64_t e = additive_exponent(r);
    const std::uint64_t complete_degree = completeness_degree(r);
    const std::uint64_t degree = opts.degree_bound.value_or(complete_degree);
    if (degree == 0)
        throw InputError("degree bound must be positive");

    MalcevSearchOutcome out;
    out.searched_degree_bound = degree;
    out.searched_coefficient_modulus = e;
    out.noncommutative = !r.is_commutative();
    out.complete = degree >= complete_degree;

    if (e == 1) {
        // Only the trivial ring has exponent 1; every t works there.
        out.found = true;
        out.witness = UnaryPolynomial{{1}};
        return out;
    }

    std::uint64_t space = 1;
    for (std::uint64_t d = 0; d < degree; ++d) {
        if (space > opts.search_cap / e) {
            throw CapExceeded("Mal'cev search space " + std::to_string(e) + "^" + std::to_string(degree) +
                              " exceeds the cap of " + std::to_string(opts.search_cap) +
                              " (coefficient modulus " + std::to_string(e) + ", degree bound " +
                              std::to_string(degree) + ")");
        }
        space *= e;
    }

    const std::size_t n = r.order();
    const auto D = static_cast<std::size_t>(degree);
    // powers[x * D + i] = x^(i+1); multiples[k * n + y] = k * y.
    std::vector<Element> powers(n * D);
    for (Element x = 0; x < n; ++x) {
        Element p = x;
        for (std::size_t i = 0; i < D; ++i, p = r.mul(p, x))
            powers[x * D + i] = p;
    }
    std::vector<Element> multiples(e * n);
    for (std::uint64_t k = 0; k < e; ++k)
        for (Element y = 0; y < n; ++y)
            multiples[k * n + y] = scalar_multiple(r, k, y);

    auto works = [&](const std::vector<std::uint64_t>& b) {
        for (Element x = 0; x < n; ++x) {
            Element t = 0;
            for (std::size_t i = 0; i < b.size(); ++i)
                t = r.add(t, multiples[b[i] * n + powers[x * D + i]]);
            if (r.mul(x, t) != x)
                return false;
        }
        return true;
    };

    for (std::size_t d = 1; d <= D; ++d) {
        // Slice the degree-d candidates by leading coefficient b_1; each slice
        // is scanned in lexicographic order and the smallest hit wins.
        std::vector<std::optional<std::vector<std::uint64_t>>> hits(e);
        parallel_for(e, opts.jobs, [&](std::size_t b1) {
            if (d == 1 && b1 == 0)
                return;
            std::vector<std::uint64_t> b(d, 0);
            b[0] = b1;
            if (d > 1)
                b[d - 1] = 1;
            while (true) {
                if (works(b)) {
                    hits[b1] = b;
                    return;
                }
                // Odometer over b_2..b_d; b_d stays nonzero.
                std::size_t pos = d - 1;
                while (pos >= 1) {
                    if (++b[pos] < e)
                        break;
                    b[pos] = pos == d - 1 ? 1 : 0;
                    --pos;
                }
                if (pos == 0)
                    return;
            }
        });
        for (const auto& h : hits)
            if (h) {
                UnaryPolynomial t;
                t.coeffs.assign(h->begin(), h->end());
                if (!satisfies_malcev(r, t))
                    throw std::logic_error("Mal'cev witness failed re-verification");
                out.found = true;
                out.witness = std::move(t);
                return out;
            }
    }
    return out;
}

} // namespace ideal_forge
