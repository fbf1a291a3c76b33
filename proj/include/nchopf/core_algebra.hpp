#pragma once

// Free products over a tagged alphabet, and abelianisation onto commutative polynomials.

#include <algorithm>
#include <utility>
#include <vector>

#include "word.hpp"

namespace nchopf {

/// a ⊗ b ⊗ ... ↦ (a tagged 1)(b tagged 2)...: the inclusion of A⊗B⊗... into A∗B∗...
/// Input letters are retagged by slot; output is linear in the input.
inline NCPoly free_product_embed(const TensorElement& t)
{
    NCPoly out;
    for (const auto& [key, c] : t.terms()) {
        std::vector<Letter> ls;
        for (std::size_t s = 0; s < key.size(); ++s)
            for (const Letter& l : key[s].letters())
                ls.push_back({l.index, static_cast<int>(s) + 1});
        out.add_term(Word(std::move(ls)), c);
    }
    return out;
}

/// Gathers letters by tag, preserving the order within each tag:
/// a¹⊗b¹⊗a²⊗b² ↦ a¹a²⊗b¹b². This is an algebra homomorphism A∗B∗... -> A⊗B⊗...
inline TensorElement free_product_project(const NCPoly& p, std::size_t rank)
{
    TensorElement out(rank);
    for (const auto& [w, c] : p.terms()) {
        std::vector<std::vector<Letter>> slots(rank);
        for (const Letter& l : w.letters()) {
            if (l.tag < 1 || static_cast<std::size_t>(l.tag) > rank)
                throw std::invalid_argument("free_product_project: tag " + std::to_string(l.tag) +
                                            " outside 1.." + std::to_string(rank));
            slots[static_cast<std::size_t>(l.tag - 1)].push_back({l.index, 1});
        }
        TensorElement::key_type key;
        key.reserve(rank);
        for (auto& s : slots)
            key.emplace_back(std::move(s));
        out.add_term(std::move(key), c);
    }
    return out;
}

/// Monomial of a commutative polynomial ring: sorted (index, exponent) pairs, exponents > 0.
class CommutativeMonomial {
public:
    CommutativeMonomial() = default;

    explicit CommutativeMonomial(std::vector<std::pair<int, int>> exps) : exps_(std::move(exps))
    {
        normalize();
    }

    static CommutativeMonomial from_word(const Word& w)
    {
        std::vector<std::pair<int, int>> e;
        for (const Letter& l : w.letters())
            e.emplace_back(l.index, 1);
        return CommutativeMonomial(std::move(e));
    }

    static CommutativeMonomial variable(int index, int exponent = 1)
    {
        return CommutativeMonomial({{index, exponent}});
    }

    const std::vector<std::pair<int, int>>& exponents() const noexcept { return exps_; }

    int exponent(int index) const
    {
        for (const auto& [i, e] : exps_)
            if (i == index)
                return e;
        return 0;
    }

    long degree() const
    {
        long d = 0;
        for (const auto& [i, e] : exps_)
            d += static_cast<long>(i) * e;
        return d;
    }

    long total_exponent() const
    {
        long d = 0;
        for (const auto& [i, e] : exps_)
            d += e;
        return d;
    }

    friend CommutativeMonomial operator*(const CommutativeMonomial& x, const CommutativeMonomial& y)
    {
        std::vector<std::pair<int, int>> e = x.exps_;
        e.insert(e.end(), y.exps_.begin(), y.exps_.end());
        return CommutativeMonomial(std::move(e));
    }

    friend bool operator==(const CommutativeMonomial&, const CommutativeMonomial&) = default;

    friend bool operator<(const CommutativeMonomial& x, const CommutativeMonomial& y)
    {
        long dx = x.degree(), dy = y.degree();
        if (dx != dy)
            return dx < dy;
        long lx = x.total_exponent(), ly = y.total_exponent();
        if (lx != ly)
            return lx < ly;
        return x.exps_ < y.exps_;
    }

private:
    void normalize()
    {
        std::sort(exps_.begin(), exps_.end());
        std::vector<std::pair<int, int>> merged;
        for (const auto& [i, e] : exps_) {
            if (!merged.empty() && merged.back().first == i)
                merged.back().second += e;
            else
                merged.emplace_back(i, e);
        }
        std::erase_if(merged, [](const auto& p) { return p.second == 0; });
        exps_ = std::move(merged);
    }

    std::vector<std::pair<int, int>> exps_;
};

template <>
struct basis_traits<CommutativeMonomial> {
    static CommutativeMonomial unit() { return {}; }
    static CommutativeMonomial multiply(const CommutativeMonomial& x, const CommutativeMonomial& y)
    {
        return x * y;
    }
    static long degree(const CommutativeMonomial& m) { return m.degree(); }
};

using CommPoly = Poly<CommutativeMonomial>;
using CommTensor = Tensor<CommutativeMonomial>;

inline CommPoly comm_var(int index, int exponent = 1)
{
    return CommPoly::monomial(CommutativeMonomial::variable(index, exponent));
}

/// The quotient map onto the commutative polynomial ring (tags are forgotten).
inline CommPoly abelianize(const NCPoly& p)
{
    CommPoly out;
    for (const auto& [w, c] : p.terms())
        out.add_term(CommutativeMonomial::from_word(w), c);
    return out;
}

inline CommTensor abelianize(const TensorElement& t)
{
    return map_each_slot(t, [](const Word& w) { return CommPoly::monomial(CommutativeMonomial::from_word(w)); });
}

} // namespace nchopf
