#pragma once

// Words over a (possibly tagged) countable alphabet, and the free associative algebra on them.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "linear_combination.hpp"

namespace nchopf {

/// A generator x_index in copy `tag` of the alphabet. Tags 1..3 label free-product factors.
struct Letter {
    int index = 1;
    int tag = 1;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Untagged word from generator indices.
    static Word of(std::initializer_list<int> indices, int tag = 1)
    {
        std::vector<Letter> ls;
        for (int i : indices)
            ls.push_back({i, tag});
        return Word(std::move(ls));
    }

    static Word of(const std::vector<int>& indices, int tag = 1)
    {
        std::vector<Letter> ls;
        ls.reserve(indices.size());
        for (int i : indices)
            ls.push_back({i, tag});
        return Word(std::move(ls));
    }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    long degree() const
    {
        return std::accumulate(letters_.begin(), letters_.end(), 0L,
                               [](long d, const Letter& l) { return d + l.index; });
    }

    friend Word operator*(const Word& u, const Word& v)
    {
        std::vector<Letter> ls;
        ls.reserve(u.length() + v.length());
        ls.insert(ls.end(), u.letters_.begin(), u.letters_.end());
        ls.insert(ls.end(), v.letters_.begin(), v.letters_.end());
        return Word(std::move(ls));
    }

    friend bool operator==(const Word&, const Word&) = default;

    /// Canonical order: degree, then length, then lexicographic on letters.
    friend bool operator<(const Word& u, const Word& v)
    {
        long du = u.degree(), dv = v.degree();
        if (du != dv)
            return du < dv;
        if (u.length() != v.length())
            return u.length() < v.length();
        return u.letters_ < v.letters_;
    }

private:
    std::vector<Letter> letters_;
};

template <>
struct basis_traits<Word> {
    static Word unit() { return {}; }
    static Word multiply(const Word& u, const Word& v) { return u * v; }
    static long degree(const Word& w) { return w.degree(); }
};

/// Element of a free associative algebra over Q.
using NCPoly = Poly<Word>;
/// Element of a tensor power of a free associative algebra.
using TensorElement = Tensor<Word>;

/// The generator x_n as a polynomial.
inline NCPoly gen(int n, int tag = 1)
{
    return NCPoly::monomial(Word({Letter{n, tag}}));
}

inline NCPoly word_poly(std::initializer_list<int> indices, const Rational& c = 1)
{
    return NCPoly::monomial(Word::of(indices), c);
}

inline NCPoly poly_mul(const NCPoly& p, const NCPoly& q)
{
    return p * q;
}

inline NCPoly homogeneous_component(const NCPoly& p, long d)
{
    return p.homogeneous_component(d);
}

/// Extends a letter map to the unique unital algebra homomorphism on the free algebra.
template <class F>
NCPoly substitute(const NCPoly& p, F&& letter_image)
{
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly img(1);
        for (const Letter& l : w.letters())
            img = img * letter_image(l);
        out += img * c;
    }
    return out;
}

/// Extends a letter map into Q<X>^{⊗rank} multiplicatively to a single word.
template <class F>
TensorElement extend_multiplicatively(const Word& w, std::size_t rank, F&& letter_image)
{
    TensorElement img = TensorElement::unit(rank);
    for (const Letter& l : w.letters())
        img = img * letter_image(l);
    return img;
}

/// Algebra homomorphism Q<X> -> Q<X>^{⊗rank} determined by its values on letters.
template <class F>
TensorElement extend_multiplicatively(const NCPoly& p, std::size_t rank, F&& letter_image)
{
    TensorElement out(rank);
    for (const auto& [w, c] : p.terms())
        out += extend_multiplicatively(w, rank, letter_image) * c;
    return out;
}

/// Extends a letter map to the anti-homomorphism (S(uv) = S(v)S(u)) on the free algebra.
template <class F>
NCPoly substitute_reversed(const NCPoly& p, F&& letter_image)
{
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly img(1);
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            img = img * letter_image(*it);
        out += img * c;
    }
    return out;
}

/// Enumerates all words with letters >= min_index (tag 1) of total degree exactly d.
inline std::vector<Word> words_of_degree(int d, int min_index = 1)
{
    std::vector<Word> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Word::of(cur));
            return;
        }
        for (int i = std::max(min_index, 1); i <= remaining; ++i) {
            cur.push_back(i);
            self(self, remaining - i);
            cur.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

} // namespace nchopf
