#pragma once

#include <string>
#include <utility>

#include "ideal_forge/ring.hpp"

namespace ideal_forge {

/**
 * Direct product R1 x R2. Carrier element k encodes the pair
 * (k / |R2|, k % |R2|), so the carrier's index 0 is (0, 0).
 */
class ProductRing
{
  public:
    ProductRing(RingPtr left, RingPtr right)
        : left_(std::move(left)), right_(std::move(right))
    {
        if (!left_ || !right_)
            throw InputError("direct product of a null ring");
        const std::size_t n1 = left_->order(), n2 = right_->order();
        if (n1 * n2 > kMaxOrder)
            throw InputError("product order " + std::to_string(n1 * n2) + " exceeds the supported maximum of " +
                             std::to_string(kMaxOrder));

        RingTables t;
        t.order = n1 * n2;
        t.add.assign(t.order, std::vector<Element>(t.order));
        t.mul.assign(t.order, std::vector<Element>(t.order));
        for (Element k = 0; k < t.order; ++k) {
            auto [a, b] = decode(k);
            t.labels.push_back("(" + left_->label(a) + "," + right_->label(b) + ")");
            for (Element j = 0; j < t.order; ++j) {
                auto [c, d] = decode(j);
                t.add[k][j] = encode(left_->add(a, c), right_->add(b, d));
                t.mul[k][j] = encode(left_->mul(a, c), right_->mul(b, d));
            }
        }
        t.commutative = left_->is_commutative() && right_->is_commutative();
        std::string name = "product(" + left_->name() + "," + right_->name() + ")";
        carrier_ = build_ring(std::move(t), std::move(name));
    }

    const RingPtr& left() const noexcept { return left_; }
    const RingPtr& right() const noexcept { return right_; }
    const RingPtr& carrier() const noexcept { return carrier_; }
    std::size_t order() const noexcept { return carrier_->order(); }

    Element encode(Element a, Element b) const noexcept
    {
        return static_cast<Element>(a * right_->order() + b);
    }

    std::pair<Element, Element> decode(Element k) const noexcept
    {
        const auto n2 = static_cast<Element>(right_->order());
        return {k / n2, k % n2};
    }

    /// R1 x {0}, the kernel of the second projection.
    ElementSet left_axis() const
    {
        ElementSet s;
        for (Element a = 0; a < left_->order(); ++a)
            s.insert(encode(a, 0));
        return s;
    }

    /// {0} x R2, the kernel of the first projection.
    ElementSet right_axis() const
    {
        ElementSet s;
        for (Element b = 0; b < right_->order(); ++b)
            s.insert(encode(0, b));
        return s;
    }

    /// Encoded pair set s1 x s2.
    ElementSet pairs(ElementSet s1, ElementSet s2) const
    {
        ElementSet s;
        s1.for_each([&](Element a) { s2.for_each([&](Element b) { s.insert(encode(a, b)); }); });
        return s;
    }

  private:
    RingPtr left_;
    RingPtr right_;
    RingPtr carrier_;
};

inline ProductRing direct_product(RingPtr r1, RingPtr r2) { return ProductRing(std::move(r1), std::move(r2)); }

} // namespace ideal_forge
