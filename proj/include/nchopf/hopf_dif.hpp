#pragma once

// The Hopf algebra H^dif = Q<a_1, a_2, ...> of formal diffeomorphisms with
// non-commutative coefficients.

#include <array>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "core_algebra.hpp"
#include "memo.hpp"
#include "word.hpp"

namespace nchopf {

/// Selects Q_m^{(n)}. With a0_is_unit the letter a_0 is the unit (H^dif); without it
/// a_0 is kept as a free generator (the bialgebra B^dif).
struct QSpec {
    int m = 0;
    int n = 0;
    bool a0_is_unit = true;

    friend auto operator<=>(const QSpec&, const QSpec&) = default;
};

namespace detail {

/// Calls f(parts) for every composition of `total` into `parts` parts, each >= min_part.
template <class F>
void for_each_composition(int total, int parts, int min_part, F&& f)
{
    if (parts < 0)
        return;
    std::vector<int> cur(static_cast<std::size_t>(parts));
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts) {
            if (remaining == 0)
                f(static_cast<const std::vector<int>&>(cur));
            return;
        }
        int rest = parts - pos - 1;
        for (int v = min_part; v <= remaining - rest * min_part; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (parts == 0) {
        if (total == 0)
            f(static_cast<const std::vector<int>&>(cur));
        return;
    }
    rec(rec, 0, total);
}

/// Calls f(mult) for each integer partition of n, mult[i] = multiplicity of part i (1..n).
template <class F>
void for_each_partition(int n, F&& f)
{
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            f(static_cast<const std::vector<int>&>(mult));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            ++mult[static_cast<std::size_t>(part)];
            self(self, remaining - part, part);
            --mult[static_cast<std::size_t>(part)];
        }
    };
    rec(rec, n, n);
}

inline Word word_dropping_unit(const std::vector<int>& parts, bool a0_is_unit)
{
    std::vector<Letter> ls;
    for (int j : parts)
        if (!(a0_is_unit && j == 0))
            ls.push_back({j, 1});
    return Word(std::move(ls));
}

} // namespace detail

/// Q_m^{(n)} = Σ_{j_0+...+j_n = m} a_{j_0}...a_{j_n}, the coefficient of x^{m+n+1} in A(x)^{n+1}.
/// Q_0^{(-1)} = 1 and Q_m^{(-1)} = 0 for m > 0.
inline NCPoly q_polynomial(const QSpec& spec)
{
    if (spec.m < 0 || spec.n < -1)
        throw std::invalid_argument("q_polynomial requires m >= 0 and n >= -1");
    if (spec.n == -1)
        return spec.m == 0 ? NCPoly(1) : NCPoly();
    static detail::Memo<QSpec, NCPoly> memo;
    return memo.get(spec, [&] {
        NCPoly q;
        detail::for_each_composition(spec.m, spec.n + 1, 0, [&](const std::vector<int>& parts) {
            q.add_term(detail::word_dropping_unit(parts, spec.a0_is_unit), 1);
        });
        return q;
    });
}

inline NCPoly q_polynomial(int m, int n, bool a0_is_unit = true)
{
    return q_polynomial(QSpec{m, n, a0_is_unit});
}

/// The same polynomial assembled from positive compositions weighted by binomials,
/// Q_m^{(n)} = Σ_l C(n+1, l) Σ_{h_1+...+h_l = m, h_i >= 1} a_{h_1}...a_{h_l}. Needs a_0 = 1.
inline NCPoly q_polynomial_via_binomials(const QSpec& spec)
{
    if (!spec.a0_is_unit)
        throw std::invalid_argument("q_polynomial_via_binomials assumes a_0 = 1");
    if (spec.n < 0 || spec.m < 0)
        throw std::invalid_argument("q_polynomial_via_binomials requires m, n >= 0");
    NCPoly q;
    for (int l = 0; l <= spec.m; ++l) {
        Integer weight = binomial(spec.n + 1, l);
        if (weight == 0)
            continue;
        detail::for_each_composition(spec.m, l, 1, [&](const std::vector<int>& parts) {
            q.add_term(Word::of(parts), Rational(weight));
        });
    }
    return q;
}

/// Δ^dif a_n = Σ_{k=0}^n a_k ⊗ Q^{(k)}_{n-k}, with a_0 = 1.
inline TensorElement coproduct_dif_generator(int n)
{
    if (n < 0)
        throw std::invalid_argument("generator index must be non-negative");
    static detail::Memo<int, TensorElement> memo;
    return memo.get(n, [&] {
        TensorElement t(2);
        if (n == 0) {
            t.add_term({Word(), Word()}, 1);
            return t;
        }
        for (int k = 0; k <= n; ++k) {
            const Word left = k == 0 ? Word() : Word::of({k});
            const NCPoly q = q_polynomial(n - k, k);
            for (const auto& [w, c] : q.terms())
                t.add_term({left, w}, c);
        }
        return t;
    });
}

/// Coproduct of H^dif, extended multiplicatively to all polynomials.
inline TensorElement coproduct_dif(const NCPoly& p)
{
    return extend_multiplicatively(p, 2, [](const Letter& l) { return coproduct_dif_generator(l.index); });
}

inline TensorElement coproduct_dif(const Word& w)
{
    return extend_multiplicatively(w, 2, [](const Letter& l) { return coproduct_dif_generator(l.index); });
}

/// ε(1) = 1, ε(a_n) = 0: the constant term.
inline Rational counit_dif(const NCPoly& p)
{
    return p.constant_term();
}

inline Rational counit_dif(const Word& w)
{
    return w.empty() ? Rational(1) : Rational(0);
}

/// S a_n = -a_n - Σ_{p=1}^{n-1} (S a_p) Q^{(p)}_{n-p}.
inline NCPoly antipode_recursive(int n)
{
    if (n < 1)
        throw std::invalid_argument("antipode_recursive requires n >= 1");
    static detail::Memo<int, NCPoly> memo;
    return memo.get(n, [&] {
        NCPoly s = -gen(n);
        for (int p = 1; p < n; ++p)
            s -= antipode_recursive(p) * q_polynomial(n - p, p);
        return s;
    });
}

/// Antipode on arbitrary elements: the anti-homomorphism extending the generator values.
inline NCPoly antipode_dif(const NCPoly& p)
{
    return substitute_reversed(p, [](const Letter& l) {
        return l.index == 0 ? NCPoly(1) : antipode_recursive(l.index);
    });
}

/// λ(n_1,...,n_k) = Σ Π_i C(n_i + 1, m_i) over m_1+...+m_k = k with m_1+...+m_h >= h for h < k.
inline Integer lambda_coefficient(const std::vector<int>& tuple)
{
    if (tuple.empty())
        throw std::invalid_argument("lambda_coefficient requires a non-empty tuple");
    for (int v : tuple)
        if (v < 1)
            throw std::invalid_argument("lambda_coefficient entries must be positive");
    static detail::Memo<std::vector<int>, Integer> memo;
    return memo.get(tuple, [&] {
        const int k = static_cast<int>(tuple.size());
        Integer total = 0;
        auto rec = [&](auto&& self, int pos, int partial, const Integer& prod) -> void {
            if (pos == k) {
                if (partial == k)
                    total += prod;
                return;
            }
            const int cap = tuple[static_cast<std::size_t>(pos)] + 1;
            for (int m = 0; m <= std::min(cap, k - partial); ++m) {
                const int next = partial + m;
                const int h = pos + 1;
                if (h <= k - 1 && next < h)
                    continue;
                self(self, pos + 1, next, prod * binomial(cap, m));
            }
        };
        rec(rec, 0, 0, Integer(1));
        return total;
    });
}

/// Non-recursive antipode:
/// S a_n = -a_n - Σ_{k=1}^{n-1} (-1)^k Σ_{n_1+...+n_{k+1} = n} λ(n_1..n_k) a_{n_1}...a_{n_{k+1}}.
inline NCPoly antipode_closed(int n)
{
    if (n < 1)
        throw std::invalid_argument("antipode_closed requires n >= 1");
    NCPoly s = -gen(n);
    for (int k = 1; k <= n - 1; ++k) {
        const int sign = (k % 2 == 0) ? 1 : -1;
        detail::for_each_composition(n, k + 1, 1, [&](const std::vector<int>& parts) {
            std::vector<int> head(parts.begin(), parts.end() - 1);
            s.add_term(Word::of(parts), Rational(-sign * lambda_coefficient(head)));
        });
    }
    return s;
}

/// Left-hand side of the alternating binomial identity behind the closed antipode:
/// -C(n_1+1, q) + Σ_{k=1}^{q} (-1)^{k+1} λ(n_1..n_k) C(n_1+...+n_{k+1}+1, q-k). Vanishes.
inline Rational binomial_identity_residual(int q, const std::vector<int>& tuple)
{
    if (q < 1)
        throw std::invalid_argument("binomial_identity_residual requires q >= 1");
    if (tuple.size() != static_cast<std::size_t>(q) + 1)
        throw std::invalid_argument("binomial_identity_residual requires q + 1 entries");
    Integer lhs = -binomial(tuple[0] + 1, q);
    long long partial = 0;
    for (int k = 1; k <= q; ++k) {
        partial = 0;
        for (int i = 0; i <= k; ++i)
            partial += tuple[static_cast<std::size_t>(i)];
        std::vector<int> head(tuple.begin(), tuple.begin() + k);
        Integer term = lambda_coefficient(head) * binomial(partial + 1, q - k);
        lhs += (k % 2 == 1) ? term : Integer(-term);
    }
    return Rational(lhs);
}

/// Lift of Δ^dif into the free product H^dif ∗ H^dif (tags 1 and 2); an algebra homomorphism.
inline NCPoly coproduct_dif_star(const NCPoly& p)
{
    return substitute(p, [](const Letter& l) {
        return l.index == 0 ? NCPoly(1) : free_product_embed(coproduct_dif_generator(l.index));
    });
}

/// (Δ∗ ⊗ id)Δ∗ and (id ⊗ Δ∗)Δ∗ in the triple free product, for any letter-level lift
/// `star` whose images use tags 1 and 2.
template <class Star>
std::pair<NCPoly, NCPoly> free_coassociativity_sides(const NCPoly& p, Star&& star)
{
    const NCPoly once = star(p);
    auto shift = [](const NCPoly& q, int by) {
        return substitute(q, [by](const Letter& l) { return NCPoly::monomial(Word({Letter{l.index, l.tag + by}})); });
    };
    NCPoly left = substitute(once, [&](const Letter& l) {
        if (l.tag == 1)
            return star(gen(l.index));
        return NCPoly::monomial(Word({Letter{l.index, 3}}));
    });
    NCPoly right = substitute(once, [&](const Letter& l) {
        if (l.tag == 2)
            return shift(star(gen(l.index)), 1);
        return NCPoly::monomial(Word({Letter{l.index, 1}}));
    });
    return {left, right};
}

/// Faà di Bruno form in the a-variables (commutative):
/// Δa_n = Σ_k a_k ⊗ Σ_l (k+1)!/(k+1-l)! Σ_{Σp_i = l, Σ i p_i = n-k} Π a_i^{p_i} / p_i!.
inline CommTensor faa_di_bruno_coproduct(int n)
{
    if (n < 1)
        throw std::invalid_argument("faa_di_bruno_coproduct requires n >= 1");
    CommTensor t(2);
    for (int k = 0; k <= n; ++k) {
        const CommutativeMonomial left = k == 0 ? CommutativeMonomial() : CommutativeMonomial::variable(k);
        const int rest = n - k;
        if (rest == 0) {
            t.add_term({left, CommutativeMonomial()}, 1);
            continue;
        }
        detail::for_each_partition(rest, [&](const std::vector<int>& mult) {
            long l = 0;
            Integer denom = 1;
            std::vector<std::pair<int, int>> exps;
            for (std::size_t i = 1; i < mult.size(); ++i) {
                if (mult[i] == 0)
                    continue;
                l += mult[i];
                denom *= factorial(mult[i]);
                exps.emplace_back(static_cast<int>(i), mult[i]);
            }
            if (l > k + 1)
                return;
            Rational c(factorial(k + 1), factorial(k + 1 - l) * denom);
            t.add_term({left, CommutativeMonomial(std::move(exps))}, c);
        });
    }
    return t;
}

/// The classical Faà di Bruno coproduct in the u-variables (u_n carries the n-th
/// Taylor coefficient times n!): Δu_n = Σ_k u_k ⊗ Σ_α n!/(Π α_i! (i!)^{α_i}) Π u_i^{α_i}
/// with Σ α_i = k and Σ i α_i = n. Monomial indices are the u subscripts.
inline CommTensor faa_di_bruno_u_coproduct(int n)
{
    if (n < 1)
        throw std::invalid_argument("faa_di_bruno_u_coproduct requires n >= 1");
    CommTensor t(2);
    detail::for_each_partition(n, [&](const std::vector<int>& mult) {
        int k = 0;
        Integer denom = 1;
        std::vector<std::pair<int, int>> exps;
        for (std::size_t i = 1; i < mult.size(); ++i) {
            if (mult[i] == 0)
                continue;
            k += mult[i];
            denom *= factorial(mult[i]) * boost::multiprecision::pow(factorial(static_cast<long long>(i)),
                                                                     static_cast<unsigned>(mult[i]));
            exps.emplace_back(static_cast<int>(i), mult[i]);
        }
        t.add_term({CommutativeMonomial::variable(k), CommutativeMonomial(std::move(exps))},
                   Rational(factorial(n), denom));
    });
    return t;
}

/// Substitution u_1 -> 1, u_j -> j! a_{j-1} taking the u-form to the a-variables.
inline CommPoly u_to_a(const CommutativeMonomial& m)
{
    CommPoly out(1);
    for (const auto& [i, e] : m.exponents()) {
        if (i == 1)
            continue;
        out = out * (power(comm_var(i - 1), static_cast<unsigned>(e)) *
                     Rational(boost::multiprecision::pow(factorial(i), static_cast<unsigned>(e))));
    }
    return out;
}

/// Truncated trivariate series Σ c_{i,j,m} x^i z^j y^m with free-algebra coefficients.
using TrivariateSeries = std::map<std::array<int, 3>, NCPoly>;

namespace detail {

inline void add_to(TrivariateSeries& s, const std::array<int, 3>& key, const NCPoly& c)
{
    if (c.is_zero())
        return;
    auto& slot = s[key];
    slot += c;
    if (slot.is_zero())
        s.erase(key);
}

} // namespace detail

/// Both sides of Q(x,y) = Q(z,y) + (x - z) Q(x,y) Q(z,y), with Q(x,y) = Σ x^n y^m Q_m^{(n)},
/// truncated to x- and z-degree <= x_order and y-degree <= y_order.
inline std::pair<TrivariateSeries, TrivariateSeries> resolvent_sides(int x_order, int y_order)
{
    if (x_order < 0 || y_order < 0)
        throw std::invalid_argument("resolvent orders must be non-negative");
    TrivariateSeries lhs, rhs;
    for (int i = 0; i <= x_order; ++i)
        for (int m = 0; m <= y_order; ++m)
            detail::add_to(lhs, {i, 0, m}, q_polynomial(m, i));
    for (int j = 0; j <= x_order; ++j)
        for (int m = 0; m <= y_order; ++m)
            detail::add_to(rhs, {0, j, m}, q_polynomial(m, j));
    for (int i = 0; i <= x_order; ++i)
        for (int j = 0; j <= x_order; ++j)
            for (int m1 = 0; m1 <= y_order; ++m1)
                for (int m2 = 0; m1 + m2 <= y_order; ++m2) {
                    const NCPoly prod = q_polynomial(m1, i) * q_polynomial(m2, j);
                    if (i + 1 <= x_order)
                        detail::add_to(rhs, {i + 1, j, m1 + m2}, prod);
                    if (j + 1 <= x_order)
                        detail::add_to(rhs, {i, j + 1, m1 + m2}, -prod);
                }
    return {lhs, rhs};
}

inline bool resolvent_check(int x_order, int y_order)
{
    auto [lhs, rhs] = resolvent_sides(x_order, y_order);
    return lhs == rhs;
}

} // namespace nchopf
