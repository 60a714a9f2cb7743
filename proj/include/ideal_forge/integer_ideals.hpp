#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ideal_forge/error.hpp"
#include "ideal_forge/parallel.hpp"

namespace ideal_forge {

using BigInt = boost::multiprecision::cpp_int;

namespace zz_detail {

template <class Int>
Int abs(const Int& x)
{
    return x < 0 ? Int(-x) : x;
}

// 0 | x iff x = 0.
template <class Int>
bool divides(const Int& m, const Int& x)
{
    return m == 0 ? x == 0 : x % m == 0;
}

template <class Int>
Int gcd(Int m, Int n)
{
    m = abs(m);
    n = abs(n);
    while (n != 0) {
        Int r = m % n;
        m = n;
        n = r;
    }
    return m;
}

template <class Int>
std::string str(const Int& x)
{
    if constexpr (std::is_integral_v<Int>)
        return std::to_string(x);
    else
        return x.str();
}

} // namespace zz_detail

/// c e + d f = g with g = gcd(c, d) >= 0.
template <class Int = BigInt>
struct BezoutCertificate
{
    Int g = 0;
    Int e = 0;
    Int f = 0;

    bool valid_for(const Int& c, const Int& d) const
    {
        return c * e + d * f == g && g >= 0 && zz_detail::divides(g, c) && zz_detail::divides(g, d);
    }
};

/// Extended Euclid. xgcd(0, 0) = (0, 0, 0).
template <class Int = BigInt>
BezoutCertificate<Int> xgcd(const Int& m, const Int& n)
{
    if (m == 0 && n == 0)
        return {0, 0, 0};
    Int old_r = m, r = n, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, Int(old_r - q * r));
        std::tie(old_s, s) = std::make_tuple(s, Int(old_s - q * s));
        std::tie(old_t, t) = std::make_tuple(t, Int(old_t - q * t));
    }
    if (old_r < 0)
        return {Int(-old_r), Int(-old_s), Int(-old_t)};
    return {old_r, old_s, old_t};
}

/**
 * The ideal of cZ x dZ generated by (a, b), where c | a and d | b. As a set
 * it is (a, b)Z + (acZ x bdZ).
 */
template <class Int = BigInt>
class BasicZZPrincipalIdeal
{
  public:
    /// Throws DomainError unless c | a and d | b (0 | x iff x = 0).
    BasicZZPrincipalIdeal(Int a, Int b, Int c, Int d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
        if (!zz_detail::divides(c_, a_))
            throw DomainError("c = " + zz_detail::str(c_) + " does not divide a = " + zz_detail::str(a_));
        if (!zz_detail::divides(d_, b_))
            throw DomainError("d = " + zz_detail::str(d_) + " does not divide b = " + zz_detail::str(b_));
    }

    const Int& a() const noexcept { return a_; }
    const Int& b() const noexcept { return b_; }
    const Int& c() const noexcept { return c_; }
    const Int& d() const noexcept { return d_; }

    /// Throws DomainError unless (u, v) lies in cZ x dZ.
    void require_ambient(const Int& u, const Int& v) const
    {
        if (!zz_detail::divides(c_, u) || !zz_detail::divides(d_, v))
            throw DomainError("(" + zz_detail::str(u) + "," + zz_detail::str(v) + ") is not in " +
                              zz_detail::str(c_) + "Z x " + zz_detail::str(d_) + "Z");
    }

  private:
    Int a_, b_, c_, d_;
};

using ZZPrincipalIdeal = BasicZZPrincipalIdeal<BigInt>;

/**
 * Membership of (u, v) in I(a, b): is there n, x, y with
 * (u, v) = n (a, b) + (acx, bdy)?
 *
 * Writing u = a(n + cx) and v = b(n + dy), both a | u and b | v are needed,
 * and n exists iff u/a = n (mod c) and v/b = n (mod d) are simultaneously
 * solvable, i.e. gcd(c, d) | u/a - v/b. A zero generator coordinate forces
 * the matching coordinate to 0.
 */
template <class Int>
bool zz_member(const BasicZZPrincipalIdeal<Int>& i, const Int& u, const Int& v)
{
    using zz_detail::divides;
    i.require_ambient(u, v);
    const Int &a = i.a(), &b = i.b();
    if (a == 0 && b == 0)
        return u == 0 && v == 0;
    if (a == 0)
        return u == 0 && divides(b, v);
    if (b == 0)
        return v == 0 && divides(a, u);
    if (!divides(a, u) || !divides(b, v))
        return false;
    return divides(zz_detail::gcd(i.c(), i.d()), Int(u / a - v / b));
}

/**
 * Membership by direct search over n. The divisibility of u - na by ac only
 * depends on n mod c, and that of v - nb by bd only on n mod d, so one full
 * residue range of n decides the question.
 */
template <class Int>
bool zz_member_bruteforce(const BasicZZPrincipalIdeal<Int>& i, const Int& u, const Int& v)
{
    i.require_ambient(u, v);
    const Int &a = i.a(), &b = i.b(), &c = i.c(), &d = i.d();
    auto fits = [](const Int& target, const Int& n, const Int& gen, const Int& step) {
        // target = n*gen + step*k for some k
        const Int rest = target - n * gen;
        return step == 0 ? rest == 0 : rest % step == 0;
    };
    if (a == 0 && b == 0)
        return u == 0 && v == 0;
    if (b == 0) {
        if (v != 0)
            return false;
        for (Int n = 0; n < zz_detail::abs(c); ++n)
            if (fits(u, n, a, Int(a * c)))
                return true;
        return false;
    }
    if (a == 0) {
        if (u != 0)
            return false;
        for (Int n = 0; n < zz_detail::abs(d); ++n)
            if (fits(v, n, b, Int(b * d)))
                return true;
        return false;
    }
    const Int period = zz_detail::abs(Int(c * d));
    for (Int n = 0; n < period; ++n)
        if (fits(u, n, a, Int(a * c)) && fits(v, n, b, Int(b * d)))
            return true;
    return false;
}

/// I(a, b) splits as aZ x bZ iff (a, 0) and (0, b) both lie in it.
template <class Int>
bool zz_is_decomposable(const BasicZZPrincipalIdeal<Int>& i)
{
    return zz_member(i, i.a(), Int(0)) && zz_member(i, Int(0), i.b());
}

/// a = 0 or b = 0 or gcd(c, d) = 1. Throws DomainError unless c | a and d | b.
template <class Int>
bool theorem3_predicate(const Int& a, const Int& b, const Int& c, const Int& d)
{
    BasicZZPrincipalIdeal<Int> check(a, b, c, d);
    return a == 0 || b == 0 || zz_detail::gcd(c, d) == 1;
}

struct SweepMismatch
{
    std::string kind;
    std::int64_t a, b, c, d;
    std::int64_t u = 0, v = 0;

    auto operator<=>(const SweepMismatch&) const = default;
};

struct SweepReport
{
    std::int64_t bound = 0;
    std::uint64_t cases = 0;
    std::uint64_t skew_cases = 0;
    std::uint64_t grid_points = 0;
    std::vector<SweepMismatch> mismatches;
};

struct SweepOptions
{
    std::int64_t bound = 6;
    unsigned jobs = 1;
    /// Upper limit on (u, v) grid evaluations, checked before any work starts.
    std::uint64_t budget = 200'000'000;
};

namespace zz_detail {

inline std::int64_t grid_radius(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    return 3 * std::max({std::abs(a * c), std::abs(b * d), std::int64_t{1}});
}

// Multiples of m in [-r, r]; just {0} when m = 0.
inline std::vector<std::int64_t> multiples_within(std::int64_t m, std::int64_t r)
{
    if (m == 0)
        return {0};
    m = std::abs(m);
    std::vector<std::int64_t> out;
    for (std::int64_t x = -(r / m) * m; x <= r; x += m)
        out.push_back(x);
    return out;
}

} // namespace zz_detail

/**
 * Checks, for every |a|,|b|,|c|,|d| <= bound with c | a and d | b:
 *  - zz_is_decomposable agrees with theorem3_predicate,
 *  - decomposability is unchanged by any sign flip of a, b, c, d,
 *  - zz_member agrees with zz_member_bruteforce on the grid of (u, v) in
 *    cZ x dZ with |u|, |v| <= 3 max(|ac|, |bd|, 1),
 *  - membership is unchanged by flipping c, d, or (a, b) together,
 *  - (0, 0) and the generator are members.
 * All arithmetic is BigInt. Throws CapExceeded if the grid exceeds the budget.
 */
inline SweepReport theorem3_sweep(const SweepOptions& opts)
{
    if (opts.bound < 0)
        throw InputError("sweep bound must be nonnegative");
    using Tuple = std::array<std::int64_t, 4>;
    std::vector<Tuple> tuples;
    std::uint64_t grid = 0;
    const std::int64_t B = opts.bound;
    for (std::int64_t c = -B; c <= B; ++c)
        for (std::int64_t a = -B; a <= B; ++a) {
            if (c == 0 ? a != 0 : a % c != 0)
                continue;
            for (std::int64_t d = -B; d <= B; ++d)
                for (std::int64_t b = -B; b <= B; ++b) {
                    if (d == 0 ? b != 0 : b % d != 0)
                        continue;
                    tuples.push_back({a, b, c, d});
                    const auto r = zz_detail::grid_radius(a, b, c, d);
                    grid += zz_detail::multiples_within(c, r).size() * zz_detail::multiples_within(d, r).size();
                    if (grid > opts.budget)
                        throw CapExceeded("sweep with bound " + std::to_string(B) + " exceeds the budget of " +
                                          std::to_string(opts.budget) + " grid evaluations");
                }
        }

    SweepReport report;
    report.bound = B;
    report.cases = tuples.size();
    report.grid_points = grid;
    std::mutex m;

    parallel_for(tuples.size(), opts.jobs, [&](std::size_t k) {
        const auto [a, b, c, d] = tuples[k];
        const BigInt A(a), Bb(b), C(c), D(d);
        std::vector<SweepMismatch> local;
        auto flag = [&](const char* kind, std::int64_t u = 0, std::int64_t v = 0) {
            local.push_back({kind, a, b, c, d, u, v});
        };

        const ZZPrincipalIdeal ideal(A, Bb, C, D);
        const bool decomposable = zz_is_decomposable(ideal);
        if (decomposable != theorem3_predicate(A, Bb, C, D))
            flag("decomposability");
        for (int signs = 1; signs < 16; ++signs) {
            const ZZPrincipalIdeal flipped(signs & 1 ? BigInt(-A) : A, signs & 2 ? BigInt(-Bb) : Bb,
                                           signs & 4 ? BigInt(-C) : C, signs & 8 ? BigInt(-D) : D);
            if (zz_is_decomposable(flipped) != decomposable) {
                flag("decomposability-sign");
                break;
            }
        }
        if (!zz_member(ideal, BigInt(0), BigInt(0)) || !zz_member(ideal, A, Bb))
            flag("generator");

        const ZZPrincipalIdeal neg_gen(BigInt(-A), BigInt(-Bb), C, D);
        const ZZPrincipalIdeal neg_c(A, Bb, BigInt(-C), D);
        const ZZPrincipalIdeal neg_d(A, Bb, C, BigInt(-D));
        const auto r = zz_detail::grid_radius(a, b, c, d);
        const auto us = zz_detail::multiples_within(c, r);
        const auto vs = zz_detail::multiples_within(d, r);
        for (std::int64_t u : us)
            for (std::int64_t v : vs) {
                const BigInt U(u), V(v);
                const bool member = zz_member(ideal, U, V);
                if (member != zz_member_bruteforce(ideal, U, V))
                    flag("membership", u, v);
                if (member != zz_member(neg_gen, U, V) || member != zz_member(neg_c, U, V) ||
                    member != zz_member(neg_d, U, V))
                    flag("membership-sign", u, v);
            }

        std::lock_guard lock(m);
        report.skew_cases += decomposable ? 0 : 1;
        report.mismatches.insert(report.mismatches.end(), local.begin(), local.end());
    });
    std::ranges::sort(report.mismatches);
    return report;
}

} // namespace ideal_forge
