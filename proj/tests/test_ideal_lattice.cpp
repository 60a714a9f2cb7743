#include <gtest/gtest.h>

#include <random>

#include "ideal_forge/builtin.hpp"
#include "ideal_forge/lattice.hpp"
#include "ideal_forge/product.hpp"
#include "oracles.hpp"

using namespace ideal_forge;

namespace {

ElementSet labels_to_set(const FiniteRing& r, std::initializer_list<const char*> labels)
{
    ElementSet s;
    for (const char* l : labels)
        s.insert(*r.find_label(l));
    return s;
}

std::vector<RingPtr> small_rings()
{
    std::vector<RingPtr> out;
    for (const auto& n : builtin_names())
        out.push_back(builtin_ring(n));
    for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"z2", "z2"}, {"z2", "z4"}, {"z4", "z4"}, {"kleinian-zero", "kleinian-zero"}, {"z2", "nc4"},
             {"nc4", "z2"}, {"zero2", "z8"}, {"zero4", "zero4"}, {"kleinian-zero", "z3"}, {"gf4", "zero4"}})
        out.push_back(ProductRing(builtin_ring(a), builtin_ring(b)).carrier());
    return out;
}

} // namespace

TEST(IsIdeal, Z4Examples)
{
    auto z4 = builtin_ring("z4");
    EXPECT_TRUE(is_ideal(*z4, labels_to_set(*z4, {"0", "2"})));
    EXPECT_FALSE(is_ideal(*z4, labels_to_set(*z4, {"0", "1"})));
    EXPECT_FALSE(is_ideal(*z4, ElementSet{}));
    EXPECT_TRUE(is_ideal(*z4, z4->carrier()));
    EXPECT_THROW(is_ideal(*z4, ElementSet::single(9)), InputError);
}

TEST(IsIdeal, NoncommutativeNeedsBothSides)
{
    auto r = builtin_ring("nc4");
    for (std::uint64_t m = 1; m < 16; ++m)
        EXPECT_EQ(is_ideal(*r, ElementSet(m)), oracle::subset_is_ideal(*r, m)) << m;
}

TEST(IdealClosure, KleinianGenerators)
{
    auto k = builtin_ring("kleinian-zero");
    EXPECT_EQ(ideal_closure(k, labels_to_set(*k, {"a"})).members(), labels_to_set(*k, {"0", "a"}));
    EXPECT_EQ(ideal_closure(k, labels_to_set(*k, {"a", "b"})).members(), k->carrier());
}

TEST(IdealClosure, KleinianSquarePrincipalIdeal)
{
    auto k = builtin_ring("kleinian-zero");
    ProductRing p(k, k);
    const Element ac = p.encode(*k->find_label("a"), *k->find_label("c"));
    const Ideal i = ideal_closure(p.carrier(), std::vector<Element>{ac});
    EXPECT_EQ(i.labels(), (std::vector<std::string>{"(0,0)", "(a,c)"}));
}

TEST(IdealClosure, EmptyAndZeroGenerators)
{
    for (const auto& r : small_rings()) {
        EXPECT_EQ(ideal_closure(r, ElementSet{}).members(), ElementSet::single(0));
        EXPECT_EQ(ideal_closure(r, ElementSet::single(0)).members(), ElementSet::single(0));
    }
}

TEST(IdealClosure, OutOfRangeGenerator)
{
    auto r = builtin_ring("z3");
    EXPECT_THROW(ideal_closure(r, std::vector<Element>{3}), InputError);
    EXPECT_THROW(ideal_closure(r, ElementSet::single(5)), InputError);
}

TEST(IdealClosure, MatchesSmallestIdealOracleOnRandomGenerators)
{
    std::mt19937_64 rng(11);
    for (const auto& r : small_rings()) {
        if (r->order() > 16)
            continue;
        for (int trial = 0; trial < 20; ++trial) {
            const std::uint64_t gens = rng() & r->carrier().mask() & (rng() | rng());
            EXPECT_EQ(ideal_closure(r, ElementSet(gens)).members().mask(),
                      oracle::smallest_ideal_containing(*r, gens))
                << r->name();
        }
    }
}

TEST(IdealClosure, IsIdempotentMonotoneAndClosed)
{
    std::mt19937_64 rng(5);
    for (const auto& r : small_rings()) {
        for (int trial = 0; trial < 30; ++trial) {
            const ElementSet s(rng() & r->carrier().mask() & rng());
            const ElementSet t = s | ElementSet(rng() & r->carrier().mask());
            const Ideal cs = ideal_closure(r, s);
            EXPECT_TRUE(is_ideal(*r, cs.members()));
            EXPECT_TRUE(s.is_subset_of(cs.members()));
            EXPECT_EQ(ideal_closure(r, cs.members()), cs);
            EXPECT_TRUE(cs.is_subset_of(ideal_closure(r, t)));
        }
    }
}

TEST(Ideal, CheckedConstructorRejectsNonIdeals)
{
    auto z4 = builtin_ring("z4");
    EXPECT_NO_THROW(Ideal(z4, labels_to_set(*z4, {"0", "2"})));
    EXPECT_THROW(Ideal(z4, labels_to_set(*z4, {"0", "1"})), InputError);
}

TEST(AllIdeals, SmallExamples)
{
    auto z2 = all_ideals(builtin_ring("z2"));
    ASSERT_EQ(z2.size(), 2U);
    EXPECT_EQ(z2[0].labels(), (std::vector<std::string>{"0"}));
    EXPECT_EQ(z2[1].labels(), (std::vector<std::string>{"0", "1"}));

    auto z4 = all_ideals(builtin_ring("z4"));
    ASSERT_EQ(z4.size(), 3U);
    EXPECT_EQ(z4[1].labels(), (std::vector<std::string>{"0", "2"}));

    auto k = all_ideals(builtin_ring("kleinian-zero"));
    ASSERT_EQ(k.size(), 5U);
    for (int i = 1; i <= 3; ++i)
        EXPECT_EQ(k[i].size(), 2U);
}

TEST(AllIdeals, AgreesWithPowerSetFiltering)
{
    for (const auto& r : small_rings()) {
        if (r->order() > 16)
            continue;
        std::vector<std::uint64_t> got;
        for (const Ideal& i : all_ideals(r))
            got.push_back(i.members().mask());
        std::ranges::sort(got);
        EXPECT_EQ(got, oracle::power_set_ideals(*r)) << r->name();
    }
}

TEST(AllIdeals, ParallelEnumerationMatchesSequential)
{
    auto r = ProductRing(builtin_ring("kleinian-zero"), builtin_ring("kleinian-zero")).carrier();
    auto seq = all_ideals(r);
    auto par = all_ideals(r, {kDefaultIdealCap, 4});
    EXPECT_EQ(seq, par);
}

TEST(AllIdeals, CapIsEnforced)
{
    auto r = ProductRing(builtin_ring("kleinian-zero"), builtin_ring("kleinian-zero")).carrier();
    EXPECT_THROW(all_ideals(r, {10, 1}), CapExceeded);
    EXPECT_EQ(all_ideals(r, {67, 1}).size(), 67U);
}

TEST(IdealSum, Examples)
{
    auto z4 = builtin_ring("z4");
    const Ideal zero = Ideal::zero(z4);
    const Ideal two(z4, labels_to_set(*z4, {"0", "2"}));
    EXPECT_EQ(ideal_sum(zero, two), two);

    auto k = builtin_ring("kleinian-zero");
    const Ideal ia(k, labels_to_set(*k, {"0", "a"}));
    const Ideal ib(k, labels_to_set(*k, {"0", "b"}));
    EXPECT_EQ(ideal_sum(ia, ib), Ideal::whole(k));
    EXPECT_EQ(ideal_intersection(ia, ib), Ideal::zero(k));
}

TEST(IdealSum, MixedRingsAreRejected)
{
    const Ideal a = Ideal::zero(builtin_ring("z4"));
    const Ideal b = Ideal::zero(builtin_ring("z2"));
    EXPECT_THROW(ideal_sum(a, b), RingMismatch);
    EXPECT_THROW(ideal_intersection(a, b), RingMismatch);
    // Structurally equal rings built separately are the same ring.
    EXPECT_NO_THROW(ideal_sum(a, Ideal::whole(builtin_ring("z4"))));
}

TEST(IdealSum, IsTheLeastUpperBound)
{
    for (const auto& r : small_rings()) {
        const auto ideals = all_ideals(r);
        for (const Ideal& i : ideals)
            for (const Ideal& j : ideals) {
                const Ideal s = ideal_sum(i, j);
                ASSERT_TRUE(i.is_subset_of(s) && j.is_subset_of(s));
                for (const Ideal& k : ideals)
                    if (i.is_subset_of(k) && j.is_subset_of(k)) {
                        ASSERT_TRUE(s.is_subset_of(k));
                    }
            }
    }
}

TEST(Lattice, ShapesOfSmallLattices)
{
    const IdealLattice z2 = lattice_of_ideals(builtin_ring("z2"));
    EXPECT_EQ(z2.size(), 2U);
    EXPECT_TRUE(z2.is_chain());
    EXPECT_TRUE(is_distributive(z2));
    EXPECT_TRUE(is_modular(z2));

    const IdealLattice z4 = lattice_of_ideals(builtin_ring("z4"));
    EXPECT_EQ(z4.size(), 3U);
    EXPECT_TRUE(z4.is_chain());
    EXPECT_TRUE(is_distributive(z4));

    const IdealLattice m3 = lattice_of_ideals(builtin_ring("kleinian-zero"));
    EXPECT_EQ(m3.size(), 5U);
    EXPECT_FALSE(m3.is_chain());
    EXPECT_FALSE(is_distributive(m3));
    EXPECT_TRUE(is_modular(m3));
    // M3: every atom covers the bottom and is covered by the top.
    EXPECT_EQ(m3.covers().size(), 6U);
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y)
            if (x != y && x != m3.bottom() && x != m3.top() && y != m3.bottom() && y != m3.top()) {
                EXPECT_EQ(m3.join(x, y), m3.top());
                EXPECT_EQ(m3.meet(x, y), m3.bottom());
            }
}

TEST(Lattice, Z4SquareIsDistributive)
{
    const IdealLattice l = lattice_of_ideals(ProductRing(builtin_ring("z4"), builtin_ring("z4")).carrier());
    EXPECT_EQ(l.size(), 9U);
    EXPECT_TRUE(is_distributive(l));
    EXPECT_TRUE(is_modular(l));
}

TEST(Lattice, EveryComputedLatticeIsModularAndBounded)
{
    for (const auto& r : small_rings()) {
        const IdealLattice l = lattice_of_ideals(r);
        EXPECT_TRUE(is_modular(l)) << r->name();
        EXPECT_EQ(l.at(l.bottom()).members(), ElementSet::single(0));
        EXPECT_EQ(l.at(l.top()).members(), r->carrier());
    }
}

TEST(Lattice, ZeroRingSquareOfZ2IsM3)
{
    // Id(zero2 x zero2) is the Klein subgroup lattice M3 again.
    const IdealLattice l = lattice_of_ideals(ProductRing(builtin_ring("zero2"), builtin_ring("zero2")).carrier());
    EXPECT_EQ(l.size(), 5U);
    EXPECT_FALSE(is_distributive(l));
    EXPECT_TRUE(is_modular(l));
}
