#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ideal_forge/builtin.hpp"
#include "ideal_forge/product.hpp"
#include "ideal_forge/ring_spec.hpp"

namespace ideal_forge {

inline constexpr int kMaxProductDepth = 3;

/**
 * Ring expressions:
 *
 *   expr := builtin-name | "file:" path | "product(" expr "," expr ")"
 *
 * Whitespace around tokens is ignored. A file path ends at the first ','
 * or ')' that is not nested inside parentheses, or at end of input.
 */
struct RingExpression
{
    struct Builtin
    {
        std::string name;
    };
    struct File
    {
        std::string path;
    };
    struct Product
    {
        std::unique_ptr<RingExpression> left;
        std::unique_ptr<RingExpression> right;
    };

    std::variant<Builtin, File, Product> node;

    int depth() const
    {
        if (const auto* p = std::get_if<Product>(&node))
            return 1 + std::max(p->left->depth(), p->right->depth());
        return 0;
    }
};

namespace detail {

class ExpressionParser
{
  public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    RingExpression parse()
    {
        RingExpression e = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("bad ring expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                         ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool consume(std::string_view token)
    {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    RingExpression expr()
    {
        if (consume("product(")) {
            RingExpression::Product p;
            p.left = std::make_unique<RingExpression>(expr());
            if (!consume(","))
                fail("expected ','");
            p.right = std::make_unique<RingExpression>(expr());
            if (!consume(")"))
                fail("expected ')'");
            return RingExpression{std::move(p)};
        }
        if (consume("file:")) {
            const std::size_t start = pos_;
            int nesting = 0;
            for (; pos_ < text_.size(); ++pos_) {
                const char ch = text_[pos_];
                if (ch == '(')
                    ++nesting;
                else if ((ch == ',' || ch == ')') && nesting == 0)
                    break;
                else if (ch == ')')
                    --nesting;
            }
            std::string path(text_.substr(start, pos_ - start));
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back())))
                path.pop_back();
            if (path.empty())
                fail("empty file path");
            return RingExpression{RingExpression::File{std::move(path)}};
        }
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            fail("expected a ring name");
        return RingExpression{RingExpression::Builtin{std::string(text_.substr(start, pos_ - start))}};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Throws InputError on syntax errors or nesting deeper than kMaxProductDepth.
inline RingExpression parse_ring_expression(std::string_view text)
{
    RingExpression e = detail::ExpressionParser(text).parse();
    if (e.depth() > kMaxProductDepth)
        throw InputError("ring expression nests products deeper than " + std::to_string(kMaxProductDepth));
    return e;
}

/// Builds the ring an expression denotes; products evaluate to their carrier.
inline RingPtr evaluate(const RingExpression& e)
{
    struct Visitor
    {
        RingPtr operator()(const RingExpression::Builtin& b) const { return builtin_ring(b.name); }
        RingPtr operator()(const RingExpression::File& f) const
        {
            return build_ring(load_ring_spec(f.path), "file:" + f.path);
        }
        RingPtr operator()(const RingExpression::Product& p) const
        {
            return ProductRing(evaluate(*p.left), evaluate(*p.right)).carrier();
        }
    };
    return std::visit(Visitor{}, e.node);
}

inline RingPtr evaluate_ring_expression(std::string_view text) { return evaluate(parse_ring_expression(text)); }

} // namespace ideal_forge
