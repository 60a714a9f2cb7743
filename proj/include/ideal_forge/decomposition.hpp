#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ideal_forge/ideal.hpp"
#include "ideal_forge/lattice.hpp"
#include "ideal_forge/product.hpp"

namespace ideal_forge {

enum class Side { left = 1, right = 2 };

namespace detail {

inline void require_carrier(const ProductRing& p, const Ideal& i)
{
    if (!same_ring(p.carrier(), i.ring()))
        throw RingMismatch("ideal does not belong to the product's carrier");
}

} // namespace detail

/// Image of i under the projection onto one factor.
inline Ideal project(const ProductRing& p, const Ideal& i, Side side)
{
    detail::require_carrier(p, i);
    ElementSet image;
    i.members().for_each([&](Element k) {
        auto [a, b] = p.decode(k);
        image.insert(side == Side::left ? a : b);
    });
    // The image of an ideal under a surjective homomorphism is an ideal; the
    // checked constructor enforces it.
    return Ideal(side == Side::left ? p.left() : p.right(), image);
}

/// I1 x I2 as an ideal of the product.
inline Ideal product_ideal(const ProductRing& p, const Ideal& i1, const Ideal& i2)
{
    if (!same_ring(p.left(), i1.ring()) || !same_ring(p.right(), i2.ring()))
        throw RingMismatch("factor ideals do not belong to the product's factors");
    return Ideal(p.carrier(), p.pairs(i1.members(), i2.members()));
}

/// (a, b) in I implies (a, 0) and (0, b) in I.
inline bool is_directly_decomposable(const ProductRing& p, const Ideal& i)
{
    detail::require_carrier(p, i);
    bool ok = true;
    i.members().for_each([&](Element k) {
        auto [a, b] = p.decode(k);
        ok = ok && i.contains(p.encode(a, 0)) && i.contains(p.encode(0, b));
    });
    return ok;
}

/// One flag per equivalent characterization of direct decomposability:
///  (i)   I = pi1(I) x pi2(I)
///  (ii)  (R1x0) meet ((0xR2) + I) <= I  and  ((R1x0) + I) meet (0xR2) <= I
///  (iii) (a,b) in I implies (a,0), (0,b) in I
///  (iv)  ((R1x0) + I) meet ((0xR2) + I) = I
struct Theorem1Profile
{
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    bool cond_iv = false;

    bool agree() const { return cond_i == cond_ii && cond_ii == cond_iii && cond_iii == cond_iv; }
};

/// Evaluates each condition independently from its definition.
inline Theorem1Profile theorem1_profile(const ProductRing& p, const Ideal& i)
{
    detail::require_carrier(p, i);
    const RingPtr& carrier = p.carrier();
    const Ideal left_axis(carrier, p.left_axis());
    const Ideal right_axis(carrier, p.right_axis());

    Theorem1Profile prof;

    const Ideal pi1 = project(p, i, Side::left);
    const Ideal pi2 = project(p, i, Side::right);
    prof.cond_i = p.pairs(pi1.members(), pi2.members()) == i.members();

    const Ideal right_plus = ideal_sum(right_axis, i);
    const Ideal left_plus = ideal_sum(left_axis, i);
    prof.cond_ii = ideal_intersection(left_axis, right_plus).is_subset_of(i) &&
                   ideal_intersection(left_plus, right_axis).is_subset_of(i);

    prof.cond_iii = is_directly_decomposable(p, i);

    prof.cond_iv = ideal_intersection(left_plus, right_plus) == i;
    return prof;
}

struct DecompositionResult
{
    enum class Kind { decomposable, skew };

    Kind kind = Kind::decomposable;
    /// Set when decomposable: i = first x second.
    std::optional<std::pair<Ideal, Ideal>> factors;
    /// Set when skew: encoded member (a, b) with (a, 0) or (0, b) missing.
    std::optional<Element> witness;

    bool decomposable() const noexcept { return kind == Kind::decomposable; }
};

/// Splits i into its projections, or reports the first member (in ascending
/// encoded order) that violates the pair-splitting condition.
inline DecompositionResult decompose(const ProductRing& p, const Ideal& i)
{
    detail::require_carrier(p, i);
    DecompositionResult out;
    i.members().for_each([&](Element k) {
        if (out.witness)
            return;
        auto [a, b] = p.decode(k);
        if (!i.contains(p.encode(a, 0)) || !i.contains(p.encode(0, b)))
            out.witness = k;
    });
    if (out.witness) {
        out.kind = DecompositionResult::Kind::skew;
        return out;
    }
    Ideal pi1 = project(p, i, Side::left);
    Ideal pi2 = project(p, i, Side::right);
    if (p.pairs(pi1.members(), pi2.members()) != i.members())
        throw std::logic_error("projections of a decomposable ideal do not multiply back");
    out.factors.emplace(std::move(pi1), std::move(pi2));
    return out;
}

/// Skew ideals among a precomputed ideal list of the carrier, sorted by mask.
inline std::vector<Ideal> skew_ideals(const ProductRing& p, const std::vector<Ideal>& ideals)
{
    std::vector<Ideal> out;
    for (const Ideal& i : ideals)
        if (!is_directly_decomposable(p, i))
            out.push_back(i);
    std::ranges::sort(out, {}, [](const Ideal& i) { return i.members().mask(); });
    return out;
}

inline std::vector<Ideal> skew_ideals(const ProductRing& p, const EnumerationOptions& opts = {})
{
    return skew_ideals(p, all_ideals(p.carrier(), opts));
}

struct SkewEntry
{
    Ideal ideal;
    Element witness;
};

/// Everything the `skew` report needs for one product.
struct ProductAnalysis
{
    std::size_t ideal_count = 0;
    std::vector<SkewEntry> skew;
    bool theorem1_agreement = true;
};

inline ProductAnalysis analyze_product(const ProductRing& p, const EnumerationOptions& opts = {})
{
    const std::vector<Ideal> ideals = all_ideals(p.carrier(), opts);
    std::vector<Theorem1Profile> profiles(ideals.size());
    std::vector<std::optional<Element>> witnesses(ideals.size());
    parallel_for(ideals.size(), opts.jobs, [&](std::size_t k) {
        profiles[k] = theorem1_profile(p, ideals[k]);
        witnesses[k] = decompose(p, ideals[k]).witness;
    });

    ProductAnalysis out;
    out.ideal_count = ideals.size();
    for (std::size_t k = 0; k < ideals.size(); ++k) {
        const bool agree = profiles[k].agree() && profiles[k].cond_iii == !witnesses[k].has_value();
        out.theorem1_agreement = out.theorem1_agreement && agree;
        if (witnesses[k])
            out.skew.push_back({ideals[k], *witnesses[k]});
    }
    std::ranges::sort(out.skew, {}, [](const SkewEntry& e) { return e.ideal.members().mask(); });
    return out;
}

/// Both sides of: Id(R1 x R2) distributive iff (no skew ideals and Id R1, Id R2 distributive).
struct DistributivityCheck
{
    bool product_distributive = false;
    bool no_skew_ideals = false;
    bool left_distributive = false;
    bool right_distributive = false;

    bool holds() const
    {
        return product_distributive == (no_skew_ideals && left_distributive && right_distributive);
    }
};

inline DistributivityCheck distributivity_check(const RingPtr& r1, const RingPtr& r2,
                                                const EnumerationOptions& opts = {})
{
    const ProductRing p(r1, r2);
    const IdealLattice product_lattice = lattice_of_ideals(p.carrier(), opts);
    DistributivityCheck c;
    c.product_distributive = is_distributive(product_lattice);
    c.no_skew_ideals = skew_ideals(p, product_lattice.ideals()).empty();
    c.left_distributive = is_distributive(lattice_of_ideals(r1, opts));
    c.right_distributive = is_distributive(lattice_of_ideals(r2, opts));
    return c;
}

/// False would indicate a bug, not a mathematical possibility.
inline bool check_distributivity_corollary(const RingPtr& r1, const RingPtr& r2,
                                           const EnumerationOptions& opts = {})
{
    return distributivity_check(r1, r2, opts).holds();
}

} // namespace ideal_forge
