#pragma once

// The Hopf algebra H^inv = Q<b_1, b_2, ...> of invertible series, the coaction of H^dif on it,
// and the smash coproduct on H^dif ⊗ H^inv. Words over b reuse Word; the alphabet of each
// tensor slot is a convention of the caller (see smash_slot_symbols).

#include <utility>
#include <vector>

#include "hopf_dif.hpp"

namespace nchopf {

/// Δ^inv b_n = Σ_{k=0}^n b_k ⊗ b_{n-k}, b_0 = 1.
inline TensorElement coproduct_inv_generator(int n)
{
    if (n < 0)
        throw std::invalid_argument("generator index must be non-negative");
    TensorElement t(2);
    auto w = [](int k) { return k == 0 ? Word() : Word::of({k}); };
    for (int k = 0; k <= n; ++k)
        t.add_term({w(k), w(n - k)}, 1);
    return t;
}

inline TensorElement coproduct_inv(const NCPoly& p)
{
    return extend_multiplicatively(p, 2, [](const Letter& l) { return coproduct_inv_generator(l.index); });
}

inline Rational counit_inv(const NCPoly& p)
{
    return p.constant_term();
}

/// S b_n = -Σ_{k<n} S(b_k) b_{n-k}, from m(S ⊗ id)Δ^inv b_n = 0.
inline NCPoly antipode_inv(int n)
{
    if (n < 1)
        throw std::invalid_argument("antipode_inv requires n >= 1");
    static detail::Memo<int, NCPoly> memo;
    return memo.get(n, [&] {
        NCPoly s = -gen(n);
        for (int k = 1; k < n; ++k)
            s -= antipode_inv(k) * gen(n - k);
        return s;
    });
}

/// S b_n = Σ over compositions (i_1..i_k) of n of (-1)^k b_{i_1}...b_{i_k}.
inline NCPoly antipode_inv_closed(int n)
{
    if (n < 1)
        throw std::invalid_argument("antipode_inv_closed requires n >= 1");
    NCPoly s;
    for (int k = 1; k <= n; ++k)
        detail::for_each_composition(n, k, 1, [&](const std::vector<int>& parts) {
            s.add_term(Word::of(parts), k % 2 ? -1 : 1);
        });
    return s;
}

/// Antipode extended to all of H^inv as an anti-homomorphism.
inline NCPoly antipode_inv(const NCPoly& p)
{
    return substitute_reversed(p, [](const Letter& l) {
        return l.index == 0 ? NCPoly(1) : antipode_inv(l.index);
    });
}

/// Lift of Δ^inv into H^inv ∗ H^inv (tags 1 and 2).
inline NCPoly coproduct_inv_star(const NCPoly& p)
{
    return substitute(p, [](const Letter& l) {
        return l.index == 0 ? NCPoly(1) : free_product_embed(coproduct_inv_generator(l.index));
    });
}

/// δ^dif b_n = Σ_{k=0}^n b_k ⊗ Q^{(k-1)}_{n-k}(a): slot 0 over b, slot 1 over a.
inline TensorElement coaction_dif_generator(int n)
{
    if (n < 0)
        throw std::invalid_argument("generator index must be non-negative");
    static detail::Memo<int, TensorElement> memo;
    return memo.get(n, [&] {
        TensorElement t(2);
        for (int k = 0; k <= n; ++k) {
            const Word left = k == 0 ? Word() : Word::of({k});
            const NCPoly q = q_polynomial(n - k, k - 1);
            for (const auto& [w, c] : q.terms())
                t.add_term({left, w}, c);
        }
        return t;
    });
}

/// Coaction H^inv -> H^inv ⊗ H^dif, extended as an algebra homomorphism.
inline TensorElement coaction_dif(const NCPoly& p)
{
    return extend_multiplicatively(p, 2, [](const Letter& l) { return coaction_dif_generator(l.index); });
}

inline TensorElement coaction_dif(const Word& w)
{
    return extend_multiplicatively(w, 2, [](const Letter& l) { return coaction_dif_generator(l.index); });
}

/// Slot alphabets of the smash carrier: (a, b, a, b).
inline const std::vector<char> smash_slot_symbols{'a', 'b', 'a', 'b'};

/// Δ^⋉(a ⊗ b) = Σ (a⟨1⟩ ⊗ b⟨1⟩') ⊗ (a⟨2⟩ b⟨1⟩'' ⊗ b⟨2⟩) for x in H^dif ⊗ H^inv (slots a, b).
inline TensorElement smash_coproduct(const TensorElement& x)
{
    if (x.rank() != 2)
        throw std::invalid_argument("smash_coproduct expects a rank-2 element of H^dif ⊗ H^inv");
    TensorElement out(4);
    for (const auto& [key, c] : x.terms()) {
        const TensorElement da = coproduct_dif(key[0]);
        // (δ^dif ⊗ id)Δ^inv b: slots (b⟨1⟩', b⟨1⟩'', b⟨2⟩)
        const TensorElement db = apply_in_slot(coproduct_inv(NCPoly::monomial(key[1])), 0, 2,
                                               [](const Word& w) { return coaction_dif(w); });
        for (const auto& [ka, ca] : da.terms())
            for (const auto& [kb, cb] : db.terms())
                out.add_term({ka[0], kb[0], ka[1] * kb[1], kb[2]}, c * ca * cb);
    }
    return out;
}

/// Applies a map on pairs of adjacent slots (first, first+1) of t, splicing the image in place.
template <class F>
TensorElement apply_on_slot_pair(const TensorElement& t, std::size_t first, std::size_t image_rank, F&& f)
{
    if (first + 1 >= t.rank())
        throw std::out_of_range("apply_on_slot_pair: slot pair outside tensor");
    TensorElement out(t.rank() - 2 + image_rank);
    for (const auto& [key, c] : t.terms()) {
        const TensorElement img = f(TensorElement::pure({key[first], key[first + 1]}));
        for (const auto& [ki, ci] : img.terms()) {
            TensorElement::key_type k(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(first));
            k.insert(k.end(), ki.begin(), ki.end());
            k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(first + 2), key.end());
            out.add_term(std::move(k), c * ci);
        }
    }
    return out;
}

/// (Δ^⋉ ⊗ id)Δ^⋉ x and (id ⊗ Δ^⋉)Δ^⋉ x, both rank 6.
inline std::pair<TensorElement, TensorElement> smash_coassociativity_sides(const TensorElement& x)
{
    const TensorElement once = smash_coproduct(x);
    auto f = [](const TensorElement& y) { return smash_coproduct(y); };
    return {apply_on_slot_pair(once, 0, 4, f), apply_on_slot_pair(once, 2, 4, f)};
}

inline Rational smash_counit(const TensorElement& x)
{
    Rational r = 0;
    for (const auto& [key, c] : x.terms())
        if (key[0].empty() && key[1].empty())
            r += c;
    return r;
}

} // namespace nchopf
