#pragma once

// The double tensor bialgebra T(T(B)+) for the trivial bialgebra B = Q·1, the bialgebra
// B^dif = Q<a_0, a_1, ...> with a free a_0, and the isomorphism between them.

#include <stdexcept>
#include <string>
#include <vector>

#include "hopf_dif.hpp"
#include "io.hpp"

namespace nchopf {

/// A word of blocks; block n stands for 1^{⊗n} in T^n(B). The empty word is the unit.
class BlockWord {
public:
    BlockWord() = default;
    explicit BlockWord(std::vector<int> blocks) : blocks_(std::move(blocks))
    {
        for (int b : blocks_)
            if (b < 1)
                throw std::invalid_argument("blocks must be positive, got " + std::to_string(b));
    }

    const std::vector<int>& blocks() const noexcept { return blocks_; }
    bool empty() const noexcept { return blocks_.empty(); }

    /// Total number of tensor factors Σ blocks.
    long size() const
    {
        long s = 0;
        for (int b : blocks_)
            s += b;
        return s;
    }

    friend BlockWord operator*(const BlockWord& x, const BlockWord& y)
    {
        BlockWord w = x;
        w.blocks_.insert(w.blocks_.end(), y.blocks_.begin(), y.blocks_.end());
        return w;
    }

    friend bool operator==(const BlockWord&, const BlockWord&) = default;

    friend bool operator<(const BlockWord& x, const BlockWord& y)
    {
        if (x.size() != y.size())
            return x.size() < y.size();
        if (x.blocks_.size() != y.blocks_.size())
            return x.blocks_.size() < y.blocks_.size();
        return x.blocks_ < y.blocks_;
    }

private:
    std::vector<int> blocks_;
};

template <>
struct basis_traits<BlockWord> {
    static BlockWord unit() { return {}; }
    static BlockWord multiply(const BlockWord& x, const BlockWord& y) { return x * y; }
    static long degree(const BlockWord& w) { return w.size(); }
};

using BlockPoly = Poly<BlockWord>;
using BlockTensor = Tensor<BlockWord>;

/// A_1: the identity at trivial B.
inline BlockWord op_A(const BlockWord& w)
{
    return w;
}

/// B_1: lengthens the first block; on the unit it creates the block [1].
inline BlockWord op_B(const BlockWord& w)
{
    std::vector<int> b = w.blocks();
    if (b.empty())
        b.push_back(1);
    else
        b[0] += 1;
    return BlockWord(std::move(b));
}

/// C_1: prepends a new block [1].
inline BlockWord op_C(const BlockWord& w)
{
    std::vector<int> b{1};
    b.insert(b.end(), w.blocks().begin(), w.blocks().end());
    return BlockWord(std::move(b));
}

/// Δ([1]) = [1]⊗[1], Δ([n+1]) = (A⊗B + B⊗C)Δ([n]).
inline BlockTensor coproduct_ttb_block(int n)
{
    if (n < 1)
        throw std::invalid_argument("block sizes are positive");
    static detail::Memo<int, BlockTensor> memo;
    return memo.get(n, [&] {
        if (n == 1)
            return BlockTensor::pure({BlockWord({1}), BlockWord({1})});
        const BlockTensor prev = coproduct_ttb_block(n - 1);
        BlockTensor out(2);
        for (const auto& [key, c] : prev.terms()) {
            out.add_term({op_A(key[0]), op_B(key[1])}, c);
            out.add_term({op_B(key[0]), op_C(key[1])}, c);
        }
        return out;
    });
}

/// Coproduct of T(T(B)+), multiplicative over concatenation of blocks.
inline BlockTensor coproduct_ttb(const BlockWord& w)
{
    BlockTensor out = BlockTensor::unit(2);
    for (int b : w.blocks())
        out = out * coproduct_ttb_block(b);
    return out;
}

inline BlockTensor coproduct_ttb(const BlockPoly& p)
{
    BlockTensor out(2);
    for (const auto& [w, c] : p.terms())
        out += coproduct_ttb(w) * c;
    return out;
}

/// ε([1]) = 1 and ε([n]) = 0 for n >= 2, extended multiplicatively.
inline Rational counit_ttb(const BlockWord& w)
{
    for (int b : w.blocks())
        if (b != 1)
            return 0;
    return 1;
}

/// All block words with Σ blocks = n.
inline std::vector<BlockWord> block_words_of_size(int n)
{
    std::vector<BlockWord> out;
    for (int parts = n == 0 ? 0 : 1; parts <= n; ++parts)
        detail::for_each_composition(n, parts, 1,
                                     [&](const std::vector<int>& b) { out.push_back(BlockWord(b)); });
    return out;
}

/// Δ a_n = Σ_k a_k ⊗ Q^{(k)}_{n-k}(a) with a_0 kept as a letter.
inline TensorElement coproduct_bdif_generator(int n)
{
    if (n < 0)
        throw std::invalid_argument("generator index must be non-negative");
    static detail::Memo<int, TensorElement> memo;
    return memo.get(n, [&] {
        TensorElement t(2);
        for (int k = 0; k <= n; ++k) {
            const NCPoly q = q_polynomial(n - k, k, false);
            for (const auto& [w, c] : q.terms())
                t.add_term({Word::of({k}), w}, c);
        }
        return t;
    });
}

/// Coproduct of B^dif, extended multiplicatively.
inline TensorElement coproduct_bdif(const NCPoly& p)
{
    return extend_multiplicatively(p, 2, [](const Letter& l) { return coproduct_bdif_generator(l.index); });
}

/// ε(a_0) = 1, ε(a_n) = 0 for n >= 1.
inline Rational counit_bdif(const Word& w)
{
    for (const Letter& l : w.letters())
        if (l.index != 0)
            return 0;
    return 1;
}

/// φ: block n ↦ a_{n-1}.
inline Word phi_iso(const BlockWord& w)
{
    std::vector<int> idx;
    for (int b : w.blocks())
        idx.push_back(b - 1);
    return Word::of(idx);
}

inline TensorElement phi_iso(const BlockTensor& t)
{
    TensorElement out(t.rank());
    for (const auto& [key, c] : t.terms()) {
        TensorElement::key_type k;
        for (const BlockWord& w : key)
            k.push_back(phi_iso(w));
        out.add_term(std::move(k), c);
    }
    return out;
}

/// The quotient B^dif -> H^dif by a_0 = 1: deletes every a_0.
inline Word quotient_a0(const Word& w)
{
    std::vector<Letter> ls;
    for (const Letter& l : w.letters())
        if (l.index != 0)
            ls.push_back(l);
    return Word(std::move(ls));
}

inline NCPoly quotient_a0(const NCPoly& p)
{
    NCPoly out;
    for (const auto& [w, c] : p.terms())
        out.add_term(quotient_a0(w), c);
    return out;
}

inline TensorElement quotient_a0(const TensorElement& t)
{
    TensorElement out(t.rank());
    for (const auto& [key, c] : t.terms()) {
        TensorElement::key_type k;
        for (const Word& w : key)
            k.push_back(quotient_a0(w));
        out.add_term(std::move(k), c);
    }
    return out;
}

/// A^φ(u) = u.
inline Word op_A_bdif(const Word& w)
{
    return w;
}

/// B^φ(a_n u) = a_{n+1} u, B^φ(1) = a_0.
inline Word op_B_bdif(const Word& w)
{
    std::vector<Letter> ls = w.letters();
    if (ls.empty())
        ls.push_back({0, 1});
    else
        ls[0].index += 1;
    return Word(std::move(ls));
}

/// C^φ(u) = a_0 u.
inline Word op_C_bdif(const Word& w)
{
    return Word::of({0}) * w;
}

/// Δ(a_{n+1}) from Δ(a_0) = a_0⊗a_0 by n+1 steps of Δ(a_{m+1}) = (A^φ⊗B^φ + B^φ⊗C^φ)Δ(a_m).
inline TensorElement coproduct_dif_via_recursion(int n)
{
    if (n < 0)
        throw std::invalid_argument("coproduct_dif_via_recursion requires n >= 0");
    TensorElement cur = TensorElement::pure({Word::of({0}), Word::of({0})});
    for (int step = 0; step <= n; ++step) {
        TensorElement next(2);
        for (const auto& [key, c] : cur.terms()) {
            next.add_term({op_A_bdif(key[0]), op_B_bdif(key[1])}, c);
            next.add_term({op_B_bdif(key[0]), op_C_bdif(key[1])}, c);
        }
        cur = std::move(next);
    }
    return cur;
}

inline std::string to_text(const BlockWord& w)
{
    if (w.empty())
        return "1";
    std::string out = "[";
    for (std::size_t i = 0; i < w.blocks().size(); ++i)
        out += (i ? "," : "") + std::to_string(w.blocks()[i]);
    return out + "]";
}

inline std::string format(const BlockTensor& t)
{
    return format_tensor(t, [](std::size_t, const BlockWord& w) { return to_text(w); });
}

inline json to_json(const BlockTensor& t)
{
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json words = json::array();
        for (const BlockWord& w : key)
            words.push_back(w.blocks());
        terms.push_back({{"words", words}, {"coeff", to_string(c)}});
    }
    return {{"rank", t.rank()}, {"terms", terms}};
}

/// Parses `[3,1]` (brackets optional).
inline BlockWord parse_block_word(const std::string& s)
{
    std::string inner;
    for (char c : s)
        if (c != '[' && c != ']' && c != ' ')
            inner += c;
    std::vector<int> blocks;
    std::size_t start = 0;
    while (start < inner.size()) {
        std::size_t end = inner.find(',', start);
        if (end == std::string::npos)
            end = inner.size();
        const std::string item = inner.substr(start, end - start);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("blocks: \"" + s + "\" is not a list of positive integers");
        blocks.push_back(std::stoi(item));
        start = end + 1;
    }
    return BlockWord(std::move(blocks));
}

} // namespace nchopf
