// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 on full success).

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ideal_forge/ideal_forge.hpp"
#include "oracles.hpp"

using namespace ideal_forge;
using nlohmann::json;

namespace {

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<RingPtr> catalog()
{
    std::vector<RingPtr> out;
    for (const auto& n : builtin_names())
        out.push_back(builtin_ring(n));
    return out;
}

RingPtr ring(const char* name) { return builtin_ring(name); }

std::size_t skew_count(const RingPtr& a, const RingPtr& b) { return skew_ideals(ProductRing(a, b)).size(); }

Outcome kleinian_skew_ideal()
{
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run({"skew", "kleinian-zero", "kleinian-zero"}, out, err);
    o.require(code == 0, "skew command exited with " + std::to_string(code));
    const json doc = json::parse(out.str());
    const std::set<std::string> target = {"(0,0)", "(a,c)"};
    bool found = false;
    for (const auto& ideal : doc["skew_ideals"])
        found = found || ideal.get<std::set<std::string>>() == target;
    o.require(found, "{(0,0),(a,c)} not reported as skew");
    o.require(doc["theorem1_agreement"].get<bool>(), "theorem1_agreement is false");
    return o;
}

Outcome theorem1_equivalence()
{
    Outcome o;
    std::size_t ideals = 0, pairs = 0;
    for (const auto& r1 : catalog())
        for (const auto& r2 : catalog()) {
            if (r1->order() * r2->order() > 64)
                continue;
            ++pairs;
            const ProductRing p(r1, r2);
            for (const Ideal& i : all_ideals(p.carrier())) {
                ++ideals;
                const Theorem1Profile t = theorem1_profile(p, i);
                o.require(t.agree(), "conditions disagree on an ideal of " + p.carrier()->name());
            }
        }
    o.detail = o.ok ? std::to_string(pairs) + " products, " + std::to_string(ideals) + " ideals" : o.detail;
    return o;
}

Outcome unitary_corollary()
{
    Outcome o;
    const std::vector<const char*> unitary = {"z2", "z3", "z4", "z5", "z6", "z8", "gf2", "gf3", "gf4"};
    for (const char* a : unitary)
        for (const char* b : unitary) {
            o.require(ring(a)->one().has_value(), std::string(a) + " is not unitary");
            o.require(skew_count(ring(a), ring(b)) == 0, std::string(a) + " x " + b + " has skew ideals");
        }
    return o;
}

Outcome boolean_times_unitary()
{
    Outcome o;
    o.require(ring("z2")->is_boolean(), "z2 is not Boolean");
    for (const char* b : {"z4", "z6", "z8"})
        o.require(skew_count(ring("z2"), ring(b)) == 0, std::string("z2 x ") + b + " has skew ideals");
    return o;
}

Outcome field_factor()
{
    Outcome o;
    for (const char* f : {"gf2", "gf3", "gf4"})
        o.require(skew_count(ring("kleinian-zero"), ring(f)) == 0, std::string("kleinian-zero x ") + f);
    o.require(!ring("nc4")->is_commutative(), "nc4 is commutative");
    o.require(skew_count(ring("nc4"), ring("gf2")) == 0, "nc4 x gf2");
    const RingPtr inner = ProductRing(ring("kleinian-zero"), ring("gf2")).carrier();
    o.require(skew_count(inner, ring("gf3")) == 0, "kleinian-zero x gf2 x gf3");
    return o;
}

Outcome theorem3_endpoint()
{
    Outcome o;
    const ZZPrincipalIdeal i(BigInt(2), BigInt(2), BigInt(2), BigInt(2));
    o.require(!zz_member(i, BigInt(0), BigInt(2)), "(0,2) in I(2,2)");
    o.require(zz_member(i, BigInt(2), BigInt(2)), "(2,2) not in I(2,2)");
    o.require(!zz_is_decomposable(i), "I(2,2) decomposable");
    auto mod4 = [](int x) { return ((x % 4) + 4) % 4; };
    for (int u = -20; u <= 20; ++u)
        for (int v = -20; v <= 20; ++v) {
            const bool coset = (mod4(u) == 0 && mod4(v) == 0) || (mod4(u) == 2 && mod4(v) == 2);
            bool member = false;
            try {
                member = zz_member(i, BigInt(u), BigInt(v));
            } catch (const DomainError&) {
                // Outside 2Z x 2Z, hence not in the ideal.
            }
            o.require(member == coset, "coset mismatch at (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    return o;
}

Outcome theorem3_sweep_bound8()
{
    Outcome o;
    const SweepReport r = theorem3_sweep({8, 1, SweepOptions{}.budget});
    o.require(r.mismatches.empty(), std::to_string(r.mismatches.size()) + " mismatches");
    if (o.ok)
        o.detail = std::to_string(r.cases) + " tuples, " + std::to_string(r.grid_points) + " grid points, " +
                   std::to_string(r.skew_cases) + " skew";
    return o;
}

Outcome theorem2_coherence()
{
    Outcome o;
    for (const char* yes : {"z2", "z3"}) {
        const MalcevSearchOutcome m = find_malcev(*ring(yes));
        o.require(m.found && m.witness && satisfies_malcev(*ring(yes), *m.witness),
                  std::string("no verified witness for ") + yes);
    }
    for (const char* no : {"kleinian-zero", "z4"}) {
        const MalcevSearchOutcome m = find_malcev(*ring(no));
        o.require(!m.found && m.complete, std::string("unexpected search result for ") + no);
    }
    for (const auto& r : catalog())
        if (find_malcev(*r).found)
            o.require(skew_count(r, r) == 0, r->name() + " has a witness but skew ideals in its square");
    return o;
}

Outcome distributivity_corollary()
{
    Outcome o;
    for (const auto& r1 : catalog())
        for (const auto& r2 : catalog())
            o.require(check_distributivity_corollary(r1, r2), r1->name() + " x " + r2->name());
    return o;
}

Outcome modularity()
{
    Outcome o;
    std::size_t lattices = 0;
    for (const auto& r1 : catalog()) {
        o.require(is_modular(lattice_of_ideals(r1)), r1->name());
        ++lattices;
        for (const auto& r2 : catalog()) {
            o.require(is_modular(lattice_of_ideals(ProductRing(r1, r2).carrier())), r1->name() + " x " + r2->name());
            ++lattices;
        }
    }
    const IdealLattice m3 = lattice_of_ideals(ring("kleinian-zero"));
    o.require(m3.size() == 5 && !is_distributive(m3), "Id(kleinian-zero) is not M3");
    if (o.ok)
        o.detail = std::to_string(lattices) + " lattices";
    return o;
}

Outcome enumeration_oracle()
{
    Outcome o;
    std::vector<RingPtr> rings = catalog();
    for (const auto& r1 : catalog())
        for (const auto& r2 : catalog())
            if (r1->order() * r2->order() <= 16)
                rings.push_back(ProductRing(r1, r2).carrier());
    for (const auto& r : rings) {
        std::vector<std::uint64_t> got;
        for (const Ideal& i : all_ideals(r))
            got.push_back(i.members().mask());
        std::ranges::sort(got);
        o.require(got == oracle::power_set_ideals(*r), r->name());
    }
    if (o.ok)
        o.detail = std::to_string(rings.size()) + " rings";
    return o;
}

struct Criterion
{
    const char* id;
    const char* title;
    double time_limit_s;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"AC1", "Kleinian skew ideal {(0,0),(a,c)} in K x K", 5, kleinian_skew_ideal},
        {"AC2", "four decomposability conditions agree on every catalog product", 300, theorem1_equivalence},
        {"AC3", "unitary x unitary has no skew ideals", 0, unitary_corollary},
        {"AC4", "Boolean x unitary has no skew ideals", 0, boolean_times_unitary},
        {"AC5", "field factor (incl. noncommutative and nested) has no skew ideals", 0, field_factor},
        {"AC6", "I(2,2) in 2Z x 2Z: membership, skewness, coset description", 0, theorem3_endpoint},
        {"AC7", "integer sweep |a|,|b|,|c|,|d| <= 8 with zero mismatches", 120, theorem3_sweep_bound8},
        {"AC8", "Mal'cev term search coherence", 0, theorem2_coherence},
        {"AC9", "distributivity biconditional on every catalog pair", 0, distributivity_corollary},
        {"AC10", "every ideal lattice is modular; Id(kleinian-zero) is M3", 0, modularity},
        {"AC11", "all_ideals agrees with power-set filtering up to order 16", 0, enumeration_oracle},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.ok = false;
            o.detail = "exceeded time limit of " + std::to_string(c.time_limit_s) + " s";
        }
        failures += o.ok ? 0 : 1;
        std::printf("[%s] %-4s %-68s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures;
}
