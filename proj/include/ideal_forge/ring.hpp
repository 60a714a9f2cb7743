#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ideal_forge/element_set.hpp"
#include "ideal_forge/error.hpp"

namespace ideal_forge {

/// Raw operation tables as supplied by a builtin or a ring-spec document.
/// Tables are row-major with row = left operand.
struct RingTables
{
    std::size_t order = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<Element>> add;
    std::vector<std::vector<Element>> mul;
    std::optional<bool> commutative;

    bool operator==(const RingTables&) const = default;
};

struct AxiomViolation
{
    std::string axiom;
    std::vector<Element> witness;

    bool operator==(const AxiomViolation&) const = default;
};

/// Outcome of checking the ring axioms. At most one violation per axiom is
/// recorded, carrying the lexicographically least witness tuple.
struct AxiomReport
{
    bool passed = true;
    std::vector<AxiomViolation> violations;

    const AxiomViolation* find(const std::string& axiom) const
    {
        auto it = std::ranges::find(violations, axiom, &AxiomViolation::axiom);
        return it == violations.end() ? nullptr : &*it;
    }
};

/// Thrown when tables are well-formed but do not describe a ring.
class AxiomError : public Error
{
  public:
    explicit AxiomError(AxiomReport report)
        : Error(describe(report)), report_(std::move(report))
    {
    }

    const AxiomReport& report() const noexcept { return report_; }

  private:
    static std::string describe(const AxiomReport& r)
    {
        std::string s = "ring axioms violated:";
        for (const auto& v : r.violations)
            s += " " + v.axiom;
        return s;
    }

    AxiomReport report_;
};

namespace detail {

inline void check_shape(const RingTables& t)
{
    if (t.order == 0)
        throw InputError("ring order must be positive");
    if (t.order > kMaxOrder)
        throw InputError("ring order " + std::to_string(t.order) + " exceeds the supported maximum of " +
                         std::to_string(kMaxOrder));
    if (t.labels.size() != t.order)
        throw InputError("expected " + std::to_string(t.order) + " labels, got " + std::to_string(t.labels.size()));
    if (std::set<std::string>(t.labels.begin(), t.labels.end()).size() != t.order)
        throw InputError("labels must be distinct");
    auto square = [&](const std::vector<std::vector<Element>>& tab, const char* name) {
        if (tab.size() != t.order)
            throw InputError(std::string(name) + " table must have " + std::to_string(t.order) + " rows");
        for (const auto& row : tab)
            if (row.size() != t.order)
                throw InputError(std::string(name) + " table must have " + std::to_string(t.order) + " columns");
    };
    square(t.add, "add");
    square(t.mul, "mul");
}

} // namespace detail

/**
 * Checks every ring axiom on raw tables: entries in range, (add) an abelian
 * group with identity 0, (mul) associative and distributive on both sides,
 * and (mul) symmetric when the commutative flag is set.
 *
 * Throws InputError only for shape problems (wrong table dimensions, label
 * count); algebraic failures are reported, never thrown.
 */
inline AxiomReport verify_axioms(const RingTables& t)
{
    detail::check_shape(t);
    AxiomReport report;
    const auto n = static_cast<Element>(t.order);
    auto fail = [&](std::string axiom, std::vector<Element> witness) {
        report.passed = false;
        report.violations.push_back({std::move(axiom), std::move(witness)});
    };

    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (t.add[x][y] >= n || t.mul[x][y] >= n) {
                fail("range", {x, y});
                return report;
            }

    const auto& A = t.add;
    const auto& M = t.mul;

    auto first_pair = [&](const char* axiom, auto&& holds) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                if (!holds(x, y)) {
                    fail(axiom, {x, y});
                    return;
                }
    };
    auto first_triple = [&](const char* axiom, auto&& holds) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                for (Element z = 0; z < n; ++z)
                    if (!holds(x, y, z)) {
                        fail(axiom, {x, y, z});
                        return;
                    }
    };

    for (Element x = 0; x < n; ++x)
        if (A[0][x] != x || A[x][0] != x) {
            fail("additive-identity", {x});
            break;
        }
    for (Element x = 0; x < n; ++x)
        if (std::ranges::none_of(A[x], [](Element s) { return s == 0; })) {
            fail("additive-inverse", {x});
            break;
        }
    first_pair("additive-commutativity", [&](Element x, Element y) { return A[x][y] == A[y][x]; });
    first_triple("additive-associativity",
                 [&](Element x, Element y, Element z) { return A[A[x][y]][z] == A[x][A[y][z]]; });
    first_triple("multiplicative-associativity",
                 [&](Element x, Element y, Element z) { return M[M[x][y]][z] == M[x][M[y][z]]; });
    first_triple("left-distributivity",
                 [&](Element x, Element y, Element z) { return M[x][A[y][z]] == A[M[x][y]][M[x][z]]; });
    first_triple("right-distributivity",
                 [&](Element x, Element y, Element z) { return M[A[x][y]][z] == A[M[x][z]][M[y][z]]; });
    if (t.commutative.value_or(false))
        first_pair("commutativity", [&](Element x, Element y) { return M[x][y] == M[y][x]; });
    return report;
}

/**
 * A finite ring given by Cayley tables over the indices 0..n-1. Index 0 is
 * the additive identity. Instances are validated on construction and
 * immutable afterwards; share them through RingPtr.
 */
class FiniteRing
{
  public:
    /// Validates the tables; throws AxiomError (with the report) or InputError.
    explicit FiniteRing(RingTables tables, std::string name = {})
        : name_(std::move(name))
    {
        AxiomReport report = verify_axioms(tables);
        if (!report.passed)
            throw AxiomError(std::move(report));

        order_ = tables.order;
        labels_ = std::move(tables.labels);
        add_.resize(order_ * order_);
        mul_.resize(order_ * order_);
        bool symmetric = true;
        for (std::size_t x = 0; x < order_; ++x)
            for (std::size_t y = 0; y < order_; ++y) {
                add_[x * order_ + y] = tables.add[x][y];
                mul_[x * order_ + y] = tables.mul[x][y];
                symmetric = symmetric && tables.mul[x][y] == tables.mul[y][x];
            }
        commutative_ = tables.commutative.value_or(symmetric);

        neg_.resize(order_);
        for (Element x = 0; x < order_; ++x)
            for (Element y = 0; y < order_; ++y)
                if (add(x, y) == 0) {
                    neg_[x] = y;
                    break;
                }

        for (Element e = 0; e < order_ && !one_; ++e) {
            bool unit = true;
            for (Element x = 0; x < order_ && unit; ++x)
                unit = mul(e, x) == x && mul(x, e) == x;
            if (unit)
                one_ = e;
        }
    }

    std::size_t order() const noexcept { return order_; }
    const std::string& name() const noexcept { return name_; }
    const std::string& label(Element e) const { return labels_.at(e); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    static constexpr Element zero() noexcept { return 0; }
    Element add(Element x, Element y) const noexcept { return add_[x * order_ + y]; }
    Element mul(Element x, Element y) const noexcept { return mul_[x * order_ + y]; }
    Element neg(Element x) const noexcept { return neg_[x]; }
    Element sub(Element x, Element y) const noexcept { return add(x, neg_[y]); }

    bool is_commutative() const noexcept { return commutative_; }

    /// Multiplicative identity, if the ring is unitary.
    std::optional<Element> one() const noexcept { return one_; }

    /// True iff the ring is unitary, commutative, nonzero and every nonzero element is invertible.
    bool is_field() const
    {
        if (!one_ || order_ < 2 || !commutative_)
            return false;
        for (Element x = 1; x < order_; ++x) {
            bool invertible = false;
            for (Element y = 1; y < order_ && !invertible; ++y)
                invertible = mul(x, y) == *one_;
            if (!invertible)
                return false;
        }
        return true;
    }

    /// True iff x*x = x for every element.
    bool is_boolean() const noexcept
    {
        for (Element x = 0; x < order_; ++x)
            if (mul(x, x) != x)
                return false;
        return true;
    }

    ElementSet carrier() const noexcept { return ElementSet::all(order_); }

    std::optional<Element> find_label(const std::string& l) const
    {
        auto it = std::ranges::find(labels_, l);
        if (it == labels_.end())
            return std::nullopt;
        return static_cast<Element>(it - labels_.begin());
    }

    /// Tables in the same shape they were built from.
    RingTables tables() const
    {
        RingTables t;
        t.order = order_;
        t.labels = labels_;
        t.add.assign(order_, std::vector<Element>(order_));
        t.mul.assign(order_, std::vector<Element>(order_));
        for (Element x = 0; x < order_; ++x)
            for (Element y = 0; y < order_; ++y) {
                t.add[x][y] = add(x, y);
                t.mul[x][y] = mul(x, y);
            }
        t.commutative = commutative_;
        return t;
    }

    /// Structural equality; the display name is ignored.
    bool operator==(const FiniteRing& o) const
    {
        return order_ == o.order_ && labels_ == o.labels_ && add_ == o.add_ && mul_ == o.mul_ &&
               commutative_ == o.commutative_;
    }

  private:
    std::string name_;
    std::size_t order_ = 0;
    std::vector<std::string> labels_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    bool commutative_ = true;
    std::optional<Element> one_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline RingPtr build_ring(RingTables tables, std::string name = {})
{
    return std::make_shared<const FiniteRing>(std::move(tables), std::move(name));
}

inline AxiomReport verify_axioms(const FiniteRing& r) { return verify_axioms(r.tables()); }

/// Pointer identity, falling back to structural equality.
inline bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace ideal_forge
