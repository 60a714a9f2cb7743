#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ideal_forge/ideal.hpp"

namespace ideal_forge {

/**
 * The lattice of all ideals of a finite ring under inclusion, with join
 * (ideal sum) and meet (intersection) materialized as index tables.
 */
class IdealLattice
{
  public:
    explicit IdealLattice(std::vector<Ideal> ideals) : ideals_(std::move(ideals))
    {
        const std::size_t m = ideals_.size();
        if (m == 0)
            throw InputError("empty ideal list");
        std::unordered_map<std::uint64_t, std::size_t> index;
        for (std::size_t k = 0; k < m; ++k)
            if (!index.emplace(ideals_[k].members().mask(), k).second)
                throw InputError("duplicate ideal in lattice");
        auto lookup = [&](const Ideal& i) {
            auto it = index.find(i.members().mask());
            if (it == index.end())
                throw std::logic_error("ideal lattice is not closed under join/meet");
            return it->second;
        };

        const RingPtr& ring = ideals_.front().ring();
        bottom_ = lookup(Ideal::zero(ring));
        top_ = lookup(Ideal::whole(ring));

        join_.assign(m * m, 0);
        meet_.assign(m * m, 0);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) {
                join_[a * m + b] = join_[b * m + a] = lookup(ideal_sum(ideals_[a], ideals_[b]));
                meet_[a * m + b] = meet_[b * m + a] = lookup(ideal_intersection(ideals_[a], ideals_[b]));
            }

        // The sum must be the least listed upper bound.
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t k = 0; k < m; ++k)
                    if (leq(a, k) && leq(b, k) && !leq(join(a, b), k))
                        throw std::logic_error("ideal sum is not the least upper bound");
    }

    std::size_t size() const noexcept { return ideals_.size(); }
    const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
    const Ideal& at(std::size_t k) const { return ideals_.at(k); }
    std::size_t bottom() const noexcept { return bottom_; }
    std::size_t top() const noexcept { return top_; }

    std::size_t join(std::size_t a, std::size_t b) const { return join_[a * ideals_.size() + b]; }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * ideals_.size() + b]; }
    bool leq(std::size_t a, std::size_t b) const { return ideals_[a].is_subset_of(ideals_[b]); }

    /// Pairs (a, b) where b covers a: a < b with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const
    {
        const std::size_t m = size();
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                if (a == b || !leq(a, b))
                    continue;
                bool cover = true;
                for (std::size_t k = 0; k < m && cover; ++k)
                    cover = k == a || k == b || !(leq(a, k) && leq(k, b));
                if (cover)
                    out.emplace_back(a, b);
            }
        return out;
    }

    bool is_chain() const
    {
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = 0; b < size(); ++b)
                if (!leq(a, b) && !leq(b, a))
                    return false;
        return true;
    }

  private:
    std::vector<Ideal> ideals_;
    std::vector<std::size_t> join_;
    std::vector<std::size_t> meet_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

inline IdealLattice lattice_of_ideals(const RingPtr& r, const EnumerationOptions& opts = {})
{
    return IdealLattice(all_ideals(r, opts));
}

/// x meet (y join z) = (x meet y) join (x meet z) for all x, y, z.
inline bool is_distributive(const IdealLattice& l)
{
    const std::size_t m = l.size();
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
                    return false;
    return true;
}

/// x join (y meet z) = (x join y) meet z whenever x <= z.
inline bool is_modular(const IdealLattice& l)
{
    const std::size_t m = l.size();
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t z = 0; z < m; ++z) {
            if (!l.leq(x, z))
                continue;
            for (std::size_t y = 0; y < m; ++y)
                if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
                    return false;
        }
    return true;
}

} // namespace ideal_forge
