#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ideal_forge {

/// Index of a ring element. Index 0 is always the additive identity.
using Element = std::uint32_t;

/// Largest carrier a FiniteRing may have; member sets are one machine word.
inline constexpr std::size_t kMaxOrder = 64;

/**
 * A subset of the elements of a ring of order at most kMaxOrder, stored as
 * a single 64-bit mask. Bit k is set iff element k is a member.
 */
class ElementSet
{
  public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t mask) : mask_(mask) {}

    /// The set {0, 1, ..., n-1}.
    static constexpr ElementSet all(std::size_t n)
    {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static constexpr ElementSet single(Element e) { return ElementSet(std::uint64_t{1} << e); }

    constexpr bool contains(Element e) const { return (mask_ >> e) & 1U; }
    constexpr void insert(Element e) { mask_ |= std::uint64_t{1} << e; }
    constexpr void erase(Element e) { mask_ &= ~(std::uint64_t{1} << e); }

    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::uint64_t mask() const { return mask_; }

    constexpr bool is_subset_of(ElementSet other) const { return (mask_ & ~other.mask_) == 0; }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(mask_ | o.mask_); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(mask_ & o.mask_); }
    constexpr ElementSet& operator|=(ElementSet o) { mask_ |= o.mask_; return *this; }
    constexpr ElementSet& operator&=(ElementSet o) { mask_ &= o.mask_; return *this; }

    constexpr bool operator==(const ElementSet&) const = default;
    constexpr auto operator<=>(const ElementSet&) const = default;

    /// Calls f(e) for every member in ascending order.
    template <class F>
    constexpr void for_each(F&& f) const
    {
        for (std::uint64_t m = mask_; m != 0; m &= m - 1)
            f(static_cast<Element>(std::countr_zero(m)));
    }

    std::vector<Element> to_vector() const
    {
        std::vector<Element> out;
        out.reserve(size());
        for_each([&](Element e) { out.push_back(e); });
        return out;
    }

  private:
    std::uint64_t mask_ = 0;
};

} // namespace ideal_forge
