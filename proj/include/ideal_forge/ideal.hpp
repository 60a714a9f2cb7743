#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ideal_forge/element_set.hpp"
#include "ideal_forge/parallel.hpp"
#include "ideal_forge/ring.hpp"

namespace ideal_forge {

inline constexpr std::size_t kDefaultIdealCap = std::size_t{1} << 20;

/// True iff s is nonempty, closed under subtraction, and absorbs
/// multiplication by every ring element on both sides.
inline bool is_ideal(const FiniteRing& r, ElementSet s)
{
    if (!s.is_subset_of(r.carrier()))
        throw InputError("element index out of range for ring of order " + std::to_string(r.order()));
    if (s.empty())
        return false;
    const auto n = static_cast<Element>(r.order());
    bool closed = true;
    s.for_each([&](Element x) {
        if (!closed)
            return;
        s.for_each([&](Element y) { closed = closed && s.contains(r.sub(x, y)); });
        for (Element t = 0; t < n && closed; ++t)
            closed = s.contains(r.mul(x, t)) && s.contains(r.mul(t, x));
    });
    return closed;
}

/// An ideal of a FiniteRing. Instances only come out of closure or a checked
/// constructor, so members always satisfy is_ideal.
class Ideal
{
  public:
    /// Throws InputError unless members form an ideal of ring.
    Ideal(RingPtr ring, ElementSet members) : ring_(std::move(ring)), members_(members)
    {
        if (!is_ideal(*ring_, members_))
            throw InputError("element set is not an ideal");
    }

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), ElementSet::single(0), unchecked{}); }
    static Ideal whole(RingPtr ring)
    {
        auto all = ring->carrier();
        return Ideal(std::move(ring), all, unchecked{});
    }

    const RingPtr& ring() const noexcept { return ring_; }
    ElementSet members() const noexcept { return members_; }
    bool contains(Element e) const noexcept { return members_.contains(e); }
    std::size_t size() const noexcept { return members_.size(); }
    bool is_subset_of(const Ideal& o) const noexcept { return members_.is_subset_of(o.members_); }

    /// Member labels in ascending element order.
    std::vector<std::string> labels() const
    {
        std::vector<std::string> out;
        members_.for_each([&](Element e) { out.push_back(ring_->label(e)); });
        return out;
    }

    bool operator==(const Ideal& o) const { return members_ == o.members_ && same_ring(ring_, o.ring_); }

  private:
    struct unchecked
    {
    };
    Ideal(RingPtr ring, ElementSet members, unchecked) : ring_(std::move(ring)), members_(members) {}

    friend Ideal ideal_closure(const RingPtr&, ElementSet);
    friend Ideal extend_ideal(const Ideal&, Element);
    friend Ideal ideal_sum(const Ideal&, const Ideal&);
    friend Ideal ideal_intersection(const Ideal&, const Ideal&);

    RingPtr ring_;
    ElementSet members_;
};

namespace detail {

// Worklist saturation starting from an ideal `base` (or {0}) plus `extra`.
inline ElementSet saturate(const FiniteRing& r, ElementSet base, ElementSet extra)
{
    const auto n = static_cast<Element>(r.order());
    ElementSet members = base;
    members.insert(0);
    std::vector<Element> work;
    auto push = [&](Element e) {
        if (!members.contains(e)) {
            members.insert(e);
            work.push_back(e);
        }
    };
    extra.for_each(push);
    while (!work.empty()) {
        const Element x = work.back();
        work.pop_back();
        for (Element t = 0; t < n; ++t) {
            push(r.mul(x, t));
            push(r.mul(t, x));
        }
        members.for_each([&](Element y) {
            push(r.sub(x, y));
            push(r.sub(y, x));
        });
    }
    return members;
}

inline void require_same_ring(const Ideal& i, const Ideal& j)
{
    if (!same_ring(i.ring(), j.ring()))
        throw RingMismatch("ideals belong to different rings");
}

} // namespace detail

/// Smallest ideal containing the generators.
inline Ideal ideal_closure(const RingPtr& r, ElementSet generators)
{
    if (!generators.is_subset_of(r->carrier()))
        throw InputError("generator index out of range for ring of order " + std::to_string(r->order()));
    return Ideal(r, detail::saturate(*r, ElementSet::single(0), generators), Ideal::unchecked{});
}

inline Ideal ideal_closure(const RingPtr& r, const std::vector<Element>& generators)
{
    ElementSet s;
    for (Element g : generators) {
        if (g >= r->order())
            throw InputError("generator index " + std::to_string(g) + " out of range for ring of order " +
                             std::to_string(r->order()));
        s.insert(g);
    }
    return ideal_closure(r, s);
}

/// Smallest ideal containing i and x.
inline Ideal extend_ideal(const Ideal& i, Element x)
{
    if (x >= i.ring()->order())
        throw InputError("element index out of range");
    return Ideal(i.ring(), detail::saturate(*i.ring(), i.members(), ElementSet::single(x)), Ideal::unchecked{});
}

/// I + J = {x + y : x in I, y in J}, computed by pairwise addition.
inline Ideal ideal_sum(const Ideal& i, const Ideal& j)
{
    detail::require_same_ring(i, j);
    const FiniteRing& r = *i.ring();
    ElementSet s;
    i.members().for_each([&](Element x) { j.members().for_each([&](Element y) { s.insert(r.add(x, y)); }); });
    assert(is_ideal(r, s) && "sum of ideals is not closed");
    return Ideal(i.ring(), s, Ideal::unchecked{});
}

inline Ideal ideal_intersection(const Ideal& i, const Ideal& j)
{
    detail::require_same_ring(i, j);
    return Ideal(i.ring(), i.members() & j.members(), Ideal::unchecked{});
}

struct EnumerationOptions
{
    std::size_t cap = kDefaultIdealCap;
    unsigned jobs = 1;
};

/**
 * Every ideal of r, without duplicates, sorted by (size, member mask).
 *
 * Breadth-first from {0}: each discovered ideal is extended by every element
 * outside it and re-closed. Every ideal is reached because it is the closure
 * of its own members. With jobs > 1 each frontier level is split across
 * workers; the visited set is the only shared state.
 */
inline std::vector<Ideal> all_ideals(const RingPtr& r, const EnumerationOptions& opts = {})
{
    const auto n = static_cast<Element>(r->order());
    std::unordered_set<std::uint64_t> visited;
    std::vector<ElementSet> found;
    std::vector<ElementSet> frontier{ElementSet::single(0)};
    visited.insert(frontier.front().mask());
    found.push_back(frontier.front());
    std::mutex m;

    while (!frontier.empty()) {
        std::vector<ElementSet> next;
        parallel_for(frontier.size(), opts.jobs, [&](std::size_t idx) {
            const ElementSet base = frontier[idx];
            std::vector<ElementSet> local;
            for (Element x = 0; x < n; ++x)
                if (!base.contains(x))
                    local.push_back(detail::saturate(*r, base, ElementSet::single(x)));
            std::lock_guard lock(m);
            for (ElementSet s : local)
                if (visited.insert(s.mask()).second) {
                    if (visited.size() > opts.cap)
                        throw CapExceeded("ideal enumeration exceeded the cap of " + std::to_string(opts.cap) +
                                          " ideals");
                    next.push_back(s);
                    found.push_back(s);
                }
        });
        frontier = std::move(next);
    }

    std::ranges::sort(found, [](ElementSet a, ElementSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
    });
    std::vector<Ideal> out;
    out.reserve(found.size());
    for (ElementSet s : found)
        out.push_back(ideal_closure(r, s));
    return out;
}

} // namespace ideal_forge
