#pragma once

// Planar binary trees, the over/under grafting products, and forests (words of trees).

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linear_combination.hpp"
#include "memo.hpp"

namespace nchopf {

/// A planar binary tree, stored as its preorder code: '1' for an internal node, '0' for a leaf.
/// The root tree `|` is "0", the tree Y with one internal vertex is "100".
class Tree {
public:
    Tree() : code_("0") {}

    static Tree leaf() { return Tree(); }
    static Tree Y() { return from_code("100"); }

    /// Checks that `code` is a well-formed preorder code.
    static Tree from_code(std::string code)
    {
        long need = 1;
        for (std::size_t i = 0; i < code.size(); ++i) {
            if (need == 0 || (code[i] != '0' && code[i] != '1'))
                throw std::invalid_argument("malformed tree code \"" + code + "\"");
            need += code[i] == '1' ? 1 : -1;
        }
        if (need != 0)
            throw std::invalid_argument("malformed tree code \"" + code + "\"");
        Tree t;
        t.code_ = std::move(code);
        return t;
    }

    const std::string& code() const noexcept { return code_; }
    bool is_leaf() const noexcept { return code_.size() == 1; }

    /// Number of internal vertices |t|.
    int nodes() const noexcept { return static_cast<int>(code_.size() / 2); }

    Tree left() const { return split().first; }
    Tree right() const { return split().second; }

    /// t = left ∨ right; throws on the root tree.
    std::pair<Tree, Tree> split() const
    {
        if (is_leaf())
            throw std::invalid_argument("the root tree has no subtrees");
        std::size_t end = subtree_end(1);
        Tree l, r;
        l.code_ = code_.substr(1, end - 1);
        r.code_ = code_.substr(end);
        return {l, r};
    }

    friend bool operator==(const Tree&, const Tree&) = default;

    /// Canonical order: by number of vertices, then by code.
    friend bool operator<(const Tree& x, const Tree& y)
    {
        if (x.code_.size() != y.code_.size())
            return x.code_.size() < y.code_.size();
        return x.code_ < y.code_;
    }

private:
    std::size_t subtree_end(std::size_t start) const
    {
        long need = 1;
        std::size_t i = start;
        while (need > 0) {
            need += code_[i] == '1' ? 1 : -1;
            ++i;
        }
        return i;
    }

    std::string code_;
};

/// r ∨ s: graft r and s on a new root.
inline Tree vee(const Tree& r, const Tree& s)
{
    return Tree::from_code("1" + r.code() + s.code());
}

/// V(t) = | ∨ t.
inline Tree v_graft(const Tree& t)
{
    return vee(Tree::leaf(), t);
}

/// t / s: the root of t grafted on the left-most leaf of s.
inline Tree over(const Tree& t, const Tree& s)
{
    std::string c = s.code();
    const std::size_t pos = c.find('0');
    c.replace(pos, 1, t.code());
    return Tree::from_code(std::move(c));
}

/// t \ s: the root of s grafted on the right-most leaf of t.
inline Tree under(const Tree& t, const Tree& s)
{
    std::string c = t.code();
    c.pop_back();
    return Tree::from_code(c + s.code());
}

/// The right brush V(V(...V(|))) with i internal vertices.
inline Tree right_brush(int i)
{
    std::string c;
    for (int k = 0; k < i; ++k)
        c += "10";
    return Tree::from_code(c + "0");
}

/// `L` for the root tree, `(l r)` for a node.
inline std::string to_text(const Tree& t)
{
    std::string out;
    auto rec = [&](auto&& self, std::size_t& i) -> void {
        if (t.code()[i] == '0') {
            out += 'L';
            ++i;
            return;
        }
        ++i;
        out += '(';
        self(self, i);
        out += ' ';
        self(self, i);
        out += ')';
    };
    std::size_t i = 0;
    rec(rec, i);
    return out;
}

/// Parses the `L` / `(l r)` format, ignoring whitespace. `|` is accepted for the root tree.
inline Tree parse_tree(std::string_view s)
{
    std::string code;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("tree parse error at offset " + std::to_string(i) + ": " + what);
    };
    auto rec = [&](auto&& self) -> void {
        skip();
        if (i >= s.size())
            fail("unexpected end of input");
        if (s[i] == 'L' || s[i] == '|') {
            code += '0';
            ++i;
            return;
        }
        if (s[i] != '(')
            fail(std::string("unexpected character '") + s[i] + "'");
        ++i;
        code += '1';
        self(self);
        self(self);
        skip();
        if (i >= s.size() || s[i] != ')')
            fail("expected ')'");
        ++i;
    };
    rec(rec);
    skip();
    if (i != s.size())
        fail("trailing characters");
    return Tree::from_code(code);
}

/// All trees with n internal vertices, in canonical order.
inline std::vector<Tree> enumerate_trees(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_trees requires n >= 0");
    static detail::Memo<int, std::vector<Tree>> memo;
    return memo.get(n, [&] {
        std::vector<Tree> out;
        if (n == 0) {
            out.push_back(Tree::leaf());
            return out;
        }
        for (int i = 0; i < n; ++i) {
            const auto ls = enumerate_trees(i);
            const auto rs = enumerate_trees(n - 1 - i);
            for (const Tree& l : ls)
                for (const Tree& r : rs)
                    out.push_back(vee(l, r));
        }
        std::sort(out.begin(), out.end());
        return out;
    });
}

/// H̃ = Q Y_∞ with the over product; the root tree is the unit.
template <>
struct basis_traits<Tree> {
    static Tree unit() { return Tree::leaf(); }
    static Tree multiply(const Tree& x, const Tree& y) { return over(x, y); }
    static long degree(const Tree& t) { return t.nodes(); }
};

using TreePoly = Poly<Tree>;
using TreeTensor = Tensor<Tree>;

/// t_n: the sum of all trees with n internal vertices.
inline TreePoly t_sum(int n)
{
    TreePoly p;
    for (const Tree& t : enumerate_trees(n))
        p.add_term(t, 1);
    return p;
}

/// A word of non-root trees; the empty forest is the unit (the root tree is identified with 1).
class Forest {
public:
    Forest() = default;

    /// Drops root trees, which are the unit.
    explicit Forest(std::vector<Tree> trees)
    {
        for (Tree& t : trees)
            if (!t.is_leaf())
                trees_.push_back(std::move(t));
    }

    explicit Forest(const Tree& t) : Forest(std::vector<Tree>{t}) {}

    const std::vector<Tree>& trees() const noexcept { return trees_; }
    bool empty() const noexcept { return trees_.empty(); }

    long degree() const
    {
        long d = 0;
        for (const Tree& t : trees_)
            d += t.nodes();
        return d;
    }

    friend Forest operator*(const Forest& x, const Forest& y)
    {
        Forest f = x;
        f.trees_.insert(f.trees_.end(), y.trees_.begin(), y.trees_.end());
        return f;
    }

    friend bool operator==(const Forest&, const Forest&) = default;

    friend bool operator<(const Forest& x, const Forest& y)
    {
        if (x.degree() != y.degree())
            return x.degree() < y.degree();
        if (x.trees_.size() != y.trees_.size())
            return x.trees_.size() < y.trees_.size();
        return x.trees_ < y.trees_;
    }

private:
    std::vector<Tree> trees_;
};

template <>
struct basis_traits<Forest> {
    static Forest unit() { return {}; }
    static Forest multiply(const Forest& x, const Forest& y) { return x * y; }
    static long degree(const Forest& f) { return f.degree(); }
};

using ForestPoly = Poly<Forest>;
using ForestTensor = Tensor<Forest>;

/// t_n as an element of the free algebra on trees (t_0 = 1).
inline ForestPoly t_sum_forest(int n)
{
    ForestPoly p;
    for (const Tree& t : enumerate_trees(n))
        p.add_term(Forest(t), 1);
    return p;
}

inline std::string to_text(const Forest& f)
{
    if (f.empty())
        return "1";
    std::string out;
    for (const Tree& t : f.trees())
        out += (out.empty() ? "" : " ") + to_text(t);
    return out;
}

} // namespace nchopf
