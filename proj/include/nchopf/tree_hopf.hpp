#pragma once

// Hopf structures on planar binary trees: Δ^α and the coaction δ^α on H̃, the propagator
// coproducts Δ^p_e and Δ^p_γ on the free algebra of trees, and the embeddings a_n, b_n ↦ t_n.

#include <string>

#include "hopf_dif.hpp"
#include "io.hpp"
#include "tree.hpp"

namespace nchopf {

TreeTensor coaction_alpha(const Tree& t);

/// Δ^α| = |⊗|, Δ^α V(r) = |⊗V(r) + δ^α V(r), Δ^α(r∨s) = Δ^α r / Δ^α V(s).
inline TreeTensor coproduct_alpha(const Tree& t)
{
    static detail::Memo<std::string, TreeTensor> memo;
    return memo.get(t.code(), [&] {
        if (t.is_leaf())
            return TreeTensor::pure({Tree::leaf(), Tree::leaf()});
        const auto [r, s] = t.split();
        if (r.is_leaf())
            return TreeTensor::pure({Tree::leaf(), t}) + coaction_alpha(t);
        return coproduct_alpha(r) * coproduct_alpha(v_graft(s));
    });
}

/// δ^α| = |⊗|, δ^α V(r) = (V⊗Id)δ^α r, δ^α(r∨s) = Δ^α r / δ^α V(s).
inline TreeTensor coaction_alpha(const Tree& t)
{
    static detail::Memo<std::string, TreeTensor> memo;
    return memo.get(t.code(), [&] {
        if (t.is_leaf())
            return TreeTensor::pure({Tree::leaf(), Tree::leaf()});
        const auto [r, s] = t.split();
        if (r.is_leaf()) {
            TreeTensor out(2);
            const TreeTensor inner = coaction_alpha(s);
            for (const auto& [key, c] : inner.terms())
                out.add_term({v_graft(key[0]), key[1]}, c);
            return out;
        }
        return coproduct_alpha(r) * coaction_alpha(v_graft(s));
    });
}

inline TreeTensor coproduct_alpha(const TreePoly& p)
{
    TreeTensor out(2);
    for (const auto& [t, c] : p.terms())
        out += coproduct_alpha(t) * c;
    return out;
}

inline TreeTensor coaction_alpha(const TreePoly& p)
{
    TreeTensor out(2);
    for (const auto& [t, c] : p.terms())
        out += coaction_alpha(t) * c;
    return out;
}

namespace detail {

/// Tree-level recursions for the propagator coproducts, before | is identified with 1.
/// E(r∨s) = |⊗(r∨s) + Σ (r∨s⟨1⟩)⊗s⟨2⟩.
inline TreeTensor propagator_e(const Tree& t)
{
    static Memo<std::string, TreeTensor> memo;
    return memo.get(t.code(), [&] {
        if (t.is_leaf())
            return TreeTensor::pure({Tree::leaf(), Tree::leaf()});
        const auto [r, s] = t.split();
        TreeTensor out = TreeTensor::pure({Tree::leaf(), t});
        const TreeTensor inner = propagator_e(s);
        for (const auto& [key, c] : inner.terms())
            out.add_term({vee(r, key[0]), key[1]}, c);
        return out;
    });
}

/// G(r∨s) = (r∨s)⊗| + Σ r⟨1⟩⊗(r⟨2⟩∨s).
inline TreeTensor propagator_gamma(const Tree& t)
{
    static Memo<std::string, TreeTensor> memo;
    return memo.get(t.code(), [&] {
        if (t.is_leaf())
            return TreeTensor::pure({Tree::leaf(), Tree::leaf()});
        const auto [r, s] = t.split();
        TreeTensor out = TreeTensor::pure({t, Tree::leaf()});
        const TreeTensor inner = propagator_gamma(r);
        for (const auto& [key, c] : inner.terms())
            out.add_term({key[0], vee(key[1], s)}, c);
        return out;
    });
}

inline ForestTensor to_forests(const TreeTensor& t)
{
    return map_each_slot(t, [](const Tree& x) { return ForestPoly::monomial(Forest(x)); });
}

template <class F>
ForestTensor extend_on_forests(const ForestPoly& p, F&& on_tree)
{
    ForestTensor out(2);
    for (const auto& [f, c] : p.terms()) {
        ForestTensor img = ForestTensor::unit(2);
        for (const Tree& t : f.trees())
            img = img * to_forests(on_tree(t));
        out += img * c;
    }
    return out;
}

} // namespace detail

/// Δ^p_e on the free algebra of trees, extended multiplicatively.
inline ForestTensor coproduct_e(const ForestPoly& p)
{
    return detail::extend_on_forests(p, [](const Tree& t) { return detail::propagator_e(t); });
}

/// Δ^p_γ on the free algebra of trees, extended multiplicatively.
inline ForestTensor coproduct_gamma(const ForestPoly& p)
{
    return detail::extend_on_forests(p, [](const Tree& t) { return detail::propagator_gamma(t); });
}

inline ForestTensor coproduct_e(const Tree& t)
{
    return coproduct_e(ForestPoly::monomial(Forest(t)));
}

inline ForestTensor coproduct_gamma(const Tree& t)
{
    return coproduct_gamma(ForestPoly::monomial(Forest(t)));
}

/// Ω: a_n ↦ t_n, products of letters ↦ over products.
inline TreePoly omega_embed(const NCPoly& p)
{
    TreePoly out;
    for (const auto& [w, c] : p.terms()) {
        TreePoly img(1);
        for (const Letter& l : w.letters())
            img = img * t_sum(l.index);
        out += img * c;
    }
    return out;
}

inline TreePoly omega_embed(const Word& w)
{
    return omega_embed(NCPoly::monomial(w));
}

/// b_n ↦ t_n into the free algebra of trees.
inline ForestPoly omega_embed_b(const NCPoly& p)
{
    ForestPoly out;
    for (const auto& [w, c] : p.terms()) {
        ForestPoly img(1);
        for (const Letter& l : w.letters())
            img = img * t_sum_forest(l.index);
        out += img * c;
    }
    return out;
}

/// (Ω ⊗ Ω) on rank-2 tensors of words.
inline TreeTensor omega_embed(const TensorElement& t)
{
    return map_each_slot(t, [](const Word& w) { return omega_embed(w); });
}

inline ForestTensor omega_embed_b(const TensorElement& t)
{
    return map_each_slot(t, [](const Word& w) { return omega_embed_b(NCPoly::monomial(w)); });
}

inline std::string format(const TreePoly& p)
{
    return format_poly(p, [](const Tree& t) { return to_text(t); }, false);
}

inline std::string format(const TreeTensor& t)
{
    return format_tensor(t, [](std::size_t, const Tree& x) { return to_text(x); });
}

inline std::string format(const ForestPoly& p)
{
    return format_poly(p, [](const Forest& f) { return to_text(f); });
}

inline std::string format(const ForestTensor& t)
{
    return format_tensor(t, [](std::size_t, const Forest& f) { return to_text(f); });
}

inline json to_json(const TreeTensor& t)
{
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json words = json::array();
        for (const Tree& x : key)
            words.push_back(to_text(x));
        terms.push_back({{"words", words}, {"coeff", to_string(c)}});
    }
    return {{"rank", t.rank()}, {"terms", terms}};
}

inline json to_json(const ForestTensor& t)
{
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json words = json::array();
        for (const Forest& f : key) {
            json trees = json::array();
            for (const Tree& x : f.trees())
                trees.push_back(to_text(x));
            words.push_back(trees);
        }
        terms.push_back({{"words", words}, {"coeff", to_string(c)}});
    }
    return {{"rank", t.rank()}, {"terms", terms}};
}

} // namespace nchopf
