#pragma once

// The tuple sets M_k and the bijection Φ : M_k -> Y_k with its inverse Ψ.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tree.hpp"

namespace nchopf {

using MTuple = std::vector<int>;

/// m ∈ M_k: non-negative entries, m_1+...+m_h >= h for h < k, and m_1+...+m_k = k.
inline bool is_mtuple(const MTuple& m)
{
    if (m.empty())
        return false;
    const long k = static_cast<long>(m.size());
    long partial = 0;
    for (long h = 1; h <= k; ++h) {
        const int v = m[static_cast<std::size_t>(h - 1)];
        if (v < 0)
            return false;
        partial += v;
        if (h < k && partial < h)
            return false;
    }
    return partial == k;
}

/// All of M_k in lexicographic order, by depth-first generation with partial-sum pruning.
inline std::vector<MTuple> enumerate_mtuples(int k)
{
    if (k < 1)
        throw std::invalid_argument("enumerate_mtuples requires k >= 1");
    std::vector<MTuple> out;
    MTuple cur(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int partial) -> void {
        if (pos == k) {
            if (partial == k)
                out.push_back(cur);
            return;
        }
        const int h = pos + 1;
        for (int v = 0; partial + v <= k; ++v) {
            if (h < k && partial + v < h)
                continue;
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, partial + v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Least l < k such that (m_1..m_l) ∈ M_l, if any.
inline std::optional<int> decompose(const MTuple& m)
{
    if (!is_mtuple(m))
        throw std::invalid_argument("decompose: tuple is not in M_k");
    long partial = 0;
    for (std::size_t l = 1; l < m.size(); ++l) {
        partial += m[l - 1];
        if (partial == static_cast<long>(l))
            return static_cast<int>(l);
    }
    return std::nullopt;
}

namespace detail {

inline Tree phi_unchecked(const MTuple& m)
{
    if (m.size() == 1)
        return Tree::Y();
    long partial = 0;
    for (std::size_t l = 1; l < m.size(); ++l) {
        partial += m[l - 1];
        if (partial == static_cast<long>(l)) {
            const MTuple head(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(l));
            const MTuple tail(m.begin() + static_cast<std::ptrdiff_t>(l), m.end());
            return under(phi_unchecked(head), phi_unchecked(tail));
        }
    }
    // Indecomposable with k > 1: m_k = 0 and m_1 > 1.
    MTuple shorter(m.begin(), m.end() - 1);
    shorter[0] -= 1;
    return over(phi_unchecked(shorter), Tree::Y());
}

} // namespace detail

/// Φ: (1) ↦ Y; a decomposable tuple ↦ Φ(head) \ Φ(tail) at the least split;
/// otherwise (m_1,...,m_{k-1},0) ↦ Φ(m_1 - 1, m_2, ..., m_{k-1}) / Y.
inline Tree phi(const MTuple& m)
{
    if (!is_mtuple(m))
        throw std::invalid_argument("phi: tuple is not in M_k");
    return detail::phi_unchecked(m);
}

/// Ψ: Y ↦ (1); t_1 / Y ↦ Ψ(t_1) with first entry incremented and 0 appended;
/// t_1 \ t_2 ↦ Ψ(t_1) Ψ(t_2).
inline MTuple psi(const Tree& t)
{
    if (t.is_leaf())
        throw std::invalid_argument("psi: the root tree has no tuple");
    if (t == Tree::Y())
        return {1};
    const auto [l, r] = t.split();
    if (r.is_leaf()) {
        // t = l / Y
        MTuple m = psi(l);
        m[0] += 1;
        m.push_back(0);
        return m;
    }
    // t = (l ∨ |) \ r
    MTuple m = psi(vee(l, Tree::leaf()));
    const MTuple tail = psi(r);
    m.insert(m.end(), tail.begin(), tail.end());
    return m;
}

inline std::string format_tuple(const MTuple& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i)
        out += (i ? "," : "") + std::to_string(m[i]);
    return out;
}

/// Parses "n1,n2,..." (spaces and surrounding parentheses allowed).
inline std::vector<int> parse_tuple(const std::string& s)
{
    std::string cleaned;
    for (char c : s)
        if (c != ' ' && c != '(' && c != ')')
            cleaned += c;
    std::vector<int> out;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos)
            throw std::invalid_argument("tuple: \"" + s + "\" is not a comma-separated list of integers");
        out.push_back(std::stoi(item));
    }
    if (out.empty())
        throw std::invalid_argument("tuple: empty");
    return out;
}

} // namespace nchopf
