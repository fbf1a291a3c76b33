#pragma once

// Degree-bounded verification suites. Each suite runs a list of named checks in increasing
// degree, so the first failure reported is a smallest counterexample.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalan.hpp"
#include "double_tensor.hpp"
#include "hopf_dif.hpp"
#include "hopf_inv.hpp"
#include "io.hpp"
#include "series.hpp"
#include "tree_hopf.hpp"

namespace nchopf {

struct CheckResult {
    std::string id;
    bool ok = true;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.ok)
                return false;
        return true;
    }

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& c : checks)
            n += c.ok ? 0 : 1;
        return n;
    }

    const CheckResult* first_failure() const
    {
        for (const auto& c : checks)
            if (!c.ok)
                return &c;
        return nullptr;
    }
};

struct SuiteOptions {
    int max_degree = 6;
    std::uint64_t seed = 20240601;
};

class Checker {
public:
    explicit Checker(std::string suite) { report_.suite = std::move(suite); }

    /// Records a check; `detail` is only evaluated on failure.
    template <class Detail>
    bool expect(bool ok, std::string id, Detail&& detail)
    {
        CheckResult r{std::move(id), ok, {}};
        if (!ok)
            r.detail = detail();
        report_.checks.push_back(std::move(r));
        return ok;
    }

    bool expect(bool ok, std::string id)
    {
        return expect(ok, std::move(id), [] { return std::string(); });
    }

    /// Equality check that prints the difference on failure.
    template <class T>
    bool expect_equal(const T& lhs, const T& rhs, std::string id)
    {
        return expect(lhs == rhs, std::move(id), [&] { return "lhs - rhs = " + format(lhs - rhs); });
    }

    void absorb(const SuiteReport& other)
    {
        for (const auto& c : other.checks)
            report_.checks.push_back(c);
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
};

inline std::string tuple_text(const std::vector<int>& v)
{
    return "(" + format_tuple(v) + ")";
}

// ---------------------------------------------------------------------------------------------
// H^dif

namespace checks {

/// Coassociativity, counit and antipode identities for a coproduct given on words.
template <class Delta, class Counit, class Antipode>
void bialgebra_axioms(Checker& ck, const std::string& label, const NCPoly& x, Delta&& delta, Counit&& counit,
                      Antipode&& antipode)
{
    const TensorElement d = delta(x);
    auto delta_w = [&](const Word& w) { return delta(NCPoly::monomial(w)); };
    ck.expect_equal(apply_in_slot(d, 0, 2, delta_w), apply_in_slot(d, 1, 2, delta_w), "coassociativity " + label);
    auto eps = [&](const Word& w) { return counit(w); };
    ck.expect_equal(apply_scalar_in_slot(d, 0, eps), TensorElement::from_poly(x), "left counit " + label);
    ck.expect_equal(apply_scalar_in_slot(d, 1, eps), TensorElement::from_poly(x), "right counit " + label);
    Rational ex = 0;
    for (const auto& [w, c] : x.terms())
        ex += c * counit(w);
    const TensorElement expected = TensorElement::from_poly(NCPoly(ex));
    auto s = [&](const Word& w) { return antipode(NCPoly::monomial(w)); };
    ck.expect_equal(multiply_slots(apply_poly_in_slot(d, 0, s), 0), expected, "m(S⊗id)Δ " + label);
    ck.expect_equal(multiply_slots(apply_poly_in_slot(d, 1, s), 0), expected, "m(id⊗S)Δ " + label);
}

inline void hopf_dif_axioms(Checker& ck, int gen_max, int mono_max)
{
    auto delta = [](const NCPoly& p) { return coproduct_dif(p); };
    auto eps = [](const Word& w) { return counit_dif(w); };
    auto s = [](const NCPoly& p) { return antipode_dif(p); };
    for (int n = 1; n <= gen_max; ++n)
        bialgebra_axioms(ck, "a" + std::to_string(n), gen(n), delta, eps, s);
    for (int d = 0; d <= mono_max; ++d)
        for (const Word& w : words_of_degree(d))
            bialgebra_axioms(ck, format_word(w), NCPoly::monomial(w), delta, eps, s);
}

inline void q_identities(Checker& ck, int max)
{
    for (int n = 0; n <= max; ++n)
        for (int m = 0; m <= max; ++m) {
            NCPoly left, right;
            for (int l = 0; l <= m; ++l) {
                const NCPoly a = l == 0 ? NCPoly(1) : gen(l);
                left += a * q_polynomial(m - l, n - 1);
                right += q_polynomial(m - l, n - 1) * a;
            }
            const std::string id = "Q recurrence m=" + std::to_string(m) + " n=" + std::to_string(n);
            ck.expect_equal(q_polynomial(m, n), left, id + " (left)");
            ck.expect_equal(q_polynomial(m, n), right, id + " (right)");
        }
    for (int l = -1; l <= max; ++l)
        for (int n = -1; n <= max; ++n)
            for (int m = 0; m <= max; ++m) {
                NCPoly sum;
                for (int k = 0; k <= m; ++k)
                    sum += q_polynomial(k, l) * q_polynomial(m - k, n);
                ck.expect_equal(q_polynomial(m, l + n + 1), sum,
                                "quadratic relation l=" + std::to_string(l) + " n=" + std::to_string(n) +
                                    " m=" + std::to_string(m));
            }
}

inline void q_structure(Checker& ck, int max)
{
    for (int n = 0; n <= max; ++n)
        for (int m = 0; m <= max; ++m) {
            ck.expect_equal(q_polynomial_via_binomials({m, n, true}), q_polynomial(m, n),
                            "binomial form of Q m=" + std::to_string(m) + " n=" + std::to_string(n));
            TensorElement rhs(2);
            for (int k = 0; k <= m; ++k)
                rhs += TensorElement::product_of({q_polynomial(m - k, n), q_polynomial(k, n + m - k)});
            ck.expect_equal(coproduct_dif(q_polynomial(m, n)), rhs,
                            "coproduct of Q m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
}

/// Δa_n = Σ_k a_k ⊗ [x^{n+1}] A(x)^{k+1}, with the powers of A(x) = x + Σ a_n x^{n+1}
/// computed by truncated series multiplication.
inline void generating_series_coproduct(Checker& ck, int max)
{
    NCPolyAlgebra alg;
    std::vector<NCPoly> tail;
    for (int n = 1; n <= max; ++n)
        tail.push_back(gen(n));
    const auto a = Series<NCPolyAlgebra>::from_tail(alg, SeriesKind::Diffeo, tail);
    const auto base = detail::diffeo_raw(a);
    std::vector<detail::Raw<NCPolyAlgebra>> powers{base};
    for (int k = 1; k <= max; ++k)
        powers.push_back(detail::raw_mul(alg, powers.back(), base, base.size()));
    for (int n = 1; n <= max; ++n) {
        TensorElement rhs(2);
        for (int k = 0; k <= n; ++k)
            rhs += TensorElement::product_of({k == 0 ? NCPoly(1) : gen(k), powers[static_cast<std::size_t>(k)]
                                                                                 [static_cast<std::size_t>(n) + 1]});
        ck.expect_equal(coproduct_dif(gen(n)), rhs, "Δ A(x) coefficient x^" + std::to_string(n + 1));
    }
}

inline void faa_di_bruno(Checker& ck, int max)
{
    for (int n = 1; n <= max; ++n) {
        ck.expect_equal(faa_di_bruno_coproduct(n), abelianize(coproduct_dif(gen(n))),
                        "abelianised coproduct a" + std::to_string(n));
        CommTensor u_in_a = map_each_slot(faa_di_bruno_u_coproduct(n + 1),
                                          [](const CommutativeMonomial& m) { return u_to_a(m); });
        ck.expect_equal(u_in_a, faa_di_bruno_coproduct(n) * Rational(factorial(n + 1)),
                        "u-variable coproduct u" + std::to_string(n + 1));
    }
}

inline void antipode_square(Checker& ck)
{
    for (int n = 1; n <= 3; ++n) {
        const bool fixed = antipode_dif(antipode_recursive(n)) == gen(n);
        ck.expect(fixed == (n <= 2), "S² a" + std::to_string(n) + (n <= 2 ? " = a" : " ≠ a") + std::to_string(n),
                  [&] { return "S² a" + std::to_string(n) + " = " + format(antipode_dif(antipode_recursive(n))); });
    }
}

inline void antipode_equivalence(Checker& ck, int max)
{
    for (int n = 1; n <= max; ++n)
        ck.expect_equal(antipode_closed(n), antipode_recursive(n), "closed = recursive a" + std::to_string(n));
}

inline void lambda_tables(Checker& ck, int k_max, int n_max)
{
    // λ summed over the tuple set M_k
    for (int k = 1; k <= k_max; ++k) {
        const auto ms = enumerate_mtuples(k);
        std::vector<int> tuple(static_cast<std::size_t>(k), 1);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == k) {
                Integer sum = 0;
                for (const auto& m : ms) {
                    Integer prod = 1;
                    for (int i = 0; i < k; ++i)
                        prod *= binomial(tuple[static_cast<std::size_t>(i)] + 1, m[static_cast<std::size_t>(i)]);
                    sum += prod;
                }
                ck.expect(sum == lambda_coefficient(tuple), "λ over M_k " + tuple_text(tuple), [&] {
                    return "M_k sum " + sum.str() + " vs λ " + lambda_coefficient(tuple).str();
                });
                return;
            }
            for (int v = 1; v <= n_max; ++v) {
                tuple[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
}

// ---------------------------------------------------------------------------------------------
// H^inv, coaction, smash

inline void hopf_inv_axioms(Checker& ck, int max)
{
    auto delta = [](const NCPoly& p) { return coproduct_inv(p); };
    auto eps = [](const Word& w) { return w.empty() ? Rational(1) : Rational(0); };
    auto s = [](const NCPoly& p) { return antipode_inv(p); };
    for (int d = 0; d <= max; ++d)
        for (const Word& w : words_of_degree(d))
            bialgebra_axioms(ck, format_word(w, {'b'}), NCPoly::monomial(w), delta, eps, s);
    NCPolyAlgebra alg;
    std::vector<NCPoly> tail;
    for (int n = 1; n <= max; ++n)
        tail.push_back(gen(n));
    const auto inv = series_inv(Series<NCPolyAlgebra>::from_tail(alg, SeriesKind::Invertible, tail));
    for (int n = 1; n <= max; ++n) {
        ck.expect_equal(antipode_inv(n), inv[n], "S b" + std::to_string(n) + " = inverse series coefficient");
        ck.expect_equal(abelianize(antipode_inv(n)), abelianize(inv[n]),
                        "abelianised S b" + std::to_string(n) + " = reciprocal coefficient");
    }
}

inline void coaction_laws(Checker& ck, int max)
{
    for (int n = 0; n <= max; ++n) {
        const std::string b = "b" + std::to_string(n);
        const NCPoly bn = n == 0 ? NCPoly(1) : gen(n);
        const TensorElement d = coaction_dif(bn);
        auto delta_dif = [](const Word& w) { return coproduct_dif(w); };
        auto coact = [](const Word& w) { return coaction_dif(w); };
        ck.expect_equal(apply_in_slot(d, 0, 2, coact), apply_in_slot(d, 1, 2, delta_dif), "coaction law " + b);

        auto delta_inv = [](const Word& w) { return coproduct_inv(NCPoly::monomial(w)); };
        const TensorElement lhs = apply_in_slot(d, 0, 2, delta_inv);
        TensorElement rhs = apply_in_slot(coproduct_inv(bn), 0, 2, coact);
        rhs = apply_in_slot(rhs, 2, 2, coact);
        rhs = multiply_slots(permute_slots(rhs, {0, 2, 1, 3}), 2);
        ck.expect_equal(lhs, rhs, "comodule-coalgebra law " + b);
        ck.expect_equal(apply_scalar_in_slot(d, 1, [](const Word& w) { return counit_dif(w); }),
                        TensorElement::from_poly(bn), "coaction counit " + b);
    }
}

inline void smash_laws(Checker& ck, int max)
{
    for (int total = 0; total <= max; ++total)
        for (int i = 0; i <= total; ++i) {
            const int j = total - i;
            const TensorElement x = TensorElement::pure({i ? Word::of({i}) : Word(), j ? Word::of({j}) : Word()});
            const std::string id = "a" + std::to_string(i) + "⊗b" + std::to_string(j);
            auto [l, r] = smash_coassociativity_sides(x);
            ck.expect(l == r, "smash coassociativity " + id,
                      [&] { return "lhs - rhs = " + format(l - r); });
            const TensorElement once = smash_coproduct(x);
            auto eps_pair = [](const TensorElement& y) { return TensorElement::scalar(smash_counit(y)); };
            ck.expect_equal(apply_on_slot_pair(once, 0, 0, eps_pair), x, "smash left counit " + id);
            ck.expect_equal(apply_on_slot_pair(once, 2, 0, eps_pair), x, "smash right counit " + id);
        }
}

inline void free_product_laws(Checker& ck, int max)
{
    auto inv_star = [](const NCPoly& p) { return coproduct_inv_star(p); };
    auto dif_star = [](const NCPoly& p) { return coproduct_dif_star(p); };
    for (int n = 1; n <= max; ++n) {
        auto [l, r] = free_coassociativity_sides(gen(n), inv_star);
        ck.expect(l == r, "Δ^inv_* coassociative b" + std::to_string(n),
                  [&] { return "lhs - rhs = " + format(l - r, {'b', true}); });
        ck.expect_equal(free_product_project(coproduct_inv_star(gen(n)), 2), coproduct_inv(gen(n)),
                        "project Δ^inv_* b" + std::to_string(n));
        ck.expect_equal(free_product_project(coproduct_dif_star(gen(n)), 2), coproduct_dif(gen(n)),
                        "project Δ^dif_* a" + std::to_string(n));
    }
    if (max >= 3) {
        auto [l, r] = free_coassociativity_sides(gen(3), dif_star);
        ck.expect(!(l == r), "Δ^dif_* not coassociative at a3",
                  [] { return std::string("both sides agree in the free product"); });
        ck.expect_equal(free_product_project(l, 3), free_product_project(r, 3),
                        "rank-3 projection of the a3 difference vanishes");
    }
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            const TensorElement t =
                TensorElement::pure({i ? Word::of({i}) : Word(), j ? Word::of({j}) : Word()});
            ck.expect_equal(free_product_project(free_product_embed(t), 2), t,
                            "project ∘ embed b" + std::to_string(i) + "⊗b" + std::to_string(j));
        }
}

// ---------------------------------------------------------------------------------------------
// Trees

inline Integer catalan_number(int n)
{
    // C_0 = 1, C_{n+1} = Σ C_i C_{n-i}
    std::vector<Integer> c{1};
    for (int m = 0; m < n; ++m) {
        Integer s = 0;
        for (int i = 0; i <= m; ++i)
            s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - i)];
        c.push_back(s);
    }
    return c[static_cast<std::size_t>(n)];
}

inline void tree_embedding(Checker& ck, int max)
{
    for (int n = 0; n <= max; ++n)
        ck.expect(Integer(enumerate_trees(n).size()) == catalan_number(n), "|Y_" + std::to_string(n) + "| = Catalan");
    for (int n = 1; n <= max; ++n) {
        const std::string id = "t" + std::to_string(n);
        auto sum_with_q = [&](int shift) {
            TreeTensor out(2);
            for (int k = 0; k <= n; ++k)
                for (const auto& [t, c] : t_sum(k).terms())
                    for (const auto& [u, d] : omega_embed(q_polynomial(n - k, k + shift)).terms())
                        out.add_term({t, u}, c * d);
            return out;
        };
        ck.expect_equal(coproduct_alpha(t_sum(n)), sum_with_q(0), "Δ^α " + id + " = Σ t_k ⊗ Q^{(k)}(t)");
        ck.expect_equal(coproduct_alpha(t_sum(n)), omega_embed(coproduct_dif(gen(n))), "Δ^α " + id + " = (Ω⊗Ω)Δa_n");
        ck.expect_equal(coaction_alpha(t_sum(n)), sum_with_q(-1), "δ^α " + id + " = Σ t_k ⊗ Q^{(k-1)}(t)");
    }
    for (int n = 0; n + 1 <= max; ++n) {
        TreePoly rhs;
        for (int m = 0; m <= n; ++m) {
            TreePoly vt;
            for (const auto& [t, c] : t_sum(m).terms())
                vt.add_term(v_graft(t), c);
            rhs += t_sum(n - m) * vt;
        }
        ck.expect_equal(t_sum(n + 1), rhs, "t_" + std::to_string(n + 1) + " = Σ t_{n-m} / V(t_m)");
    }
    for (int n = 1; n <= max; ++n)
        for (int parts = 1; parts <= n; ++parts)
            detail::for_each_composition(n, parts, 1, [&](const std::vector<int>& idx) {
                Tree brush;
                for (int i : idx)
                    brush = over(brush, right_brush(i));
                const Rational c = omega_embed(Word::of(idx)).coefficient(brush);
                ck.expect(c == 1, "right brush in Ω(a" + format_tuple(idx) + ")",
                          [&] { return "coefficient " + to_string(c); });
            });
    const int tmax = std::min(max, 5);
    for (int n = 0; n <= tmax; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            auto dal = [](const Tree& x) { return coproduct_alpha(x); };
            auto del = [](const Tree& x) { return coaction_alpha(x); };
            const TreeTensor d = coproduct_alpha(t);
            ck.expect_equal(apply_in_slot(d, 0, 2, dal), apply_in_slot(d, 1, 2, dal),
                            "Δ^α coassociative " + to_text(t));
            const TreeTensor e = coaction_alpha(t);
            ck.expect_equal(apply_in_slot(e, 0, 2, del), apply_in_slot(e, 1, 2, dal), "δ^α coaction law " + to_text(t));
        }
}

inline void propagator_coproducts(Checker& ck, int max)
{
    for (int n = 0; n <= max; ++n) {
        ForestTensor expected(2);
        for (int k = 0; k <= n; ++k)
            for (const auto& [f, c] : t_sum_forest(k).terms())
                for (const auto& [g, d] : t_sum_forest(n - k).terms())
                    expected.add_term({f, g}, c * d);
        ck.expect_equal(coproduct_e(t_sum_forest(n)), expected, "Δ^p_e t" + std::to_string(n));
        ck.expect_equal(coproduct_gamma(t_sum_forest(n)), expected, "Δ^p_γ t" + std::to_string(n));
    }
    const int tmax = std::min(max, 5);
    for (int n = 1; n <= tmax; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            auto de = [](const Forest& f) { return coproduct_e(ForestPoly::monomial(f)); };
            auto dg = [](const Forest& f) { return coproduct_gamma(ForestPoly::monomial(f)); };
            const ForestTensor e = coproduct_e(t);
            ck.expect_equal(apply_in_slot(e, 0, 2, de), apply_in_slot(e, 1, 2, de), "Δ^p_e coassociative " + to_text(t));
            const ForestTensor g = coproduct_gamma(t);
            ck.expect_equal(apply_in_slot(g, 0, 2, dg), apply_in_slot(g, 1, 2, dg), "Δ^p_γ coassociative " + to_text(t));
        }
}

inline void catalan_bijection(Checker& ck, int count_max, int roundtrip_max)
{
    for (int k = 1; k <= count_max; ++k)
        ck.expect(Integer(enumerate_mtuples(k).size()) == catalan_number(k), "|M_" + std::to_string(k) + "| = Catalan",
                  [&] { return "got " + std::to_string(enumerate_mtuples(k).size()); });
    for (int k = 1; k <= roundtrip_max; ++k) {
        bool ok = true;
        std::string bad;
        for (const MTuple& m : enumerate_mtuples(k))
            if (ok && psi(phi(m)) != m) {
                ok = false;
                bad = "Ψ(Φ" + tuple_text(m) + ") = " + tuple_text(psi(phi(m)));
            }
        ck.expect(ok, "Ψ∘Φ = id on M_" + std::to_string(k), [&] { return bad; });
        ok = true;
        for (const Tree& t : enumerate_trees(k))
            if (ok && !(phi(psi(t)) == t)) {
                ok = false;
                bad = "Φ(Ψ " + to_text(t) + ") = " + to_text(phi(psi(t)));
            }
        ck.expect(ok, "Φ∘Ψ = id on Y_" + std::to_string(k), [&] { return bad; });
    }
    const Tree y = Tree::Y();
    const Tree left = over(over(under(over(y, y), y), y), y);
    const Tree right = over(under(y, y), y);
    const MTuple example{4, 0, 1, 0, 0, 2, 1, 0};
    ck.expect(phi(example) == under(left, right), "Φ(4,0,1,0,0,2,1,0) worked example",
              [&] { return "got " + to_text(phi(example)); });
    ck.expect(psi(under(left, right)) == example, "Ψ of the worked example tree");
    ck.expect(decompose(example) == std::optional<int>(5), "least split of (4,0,1,0,0,2,1,0) at 5");
}

// ---------------------------------------------------------------------------------------------
// Double tensor

inline void ttb_iso(Checker& ck, int max)
{
    for (int s = 0; s <= max; ++s)
        for (const BlockWord& w : block_words_of_size(s)) {
            const std::string id = to_text(w);
            const BlockTensor d = coproduct_ttb(w);
            ck.expect_equal(phi_iso(d), coproduct_bdif(NCPoly::monomial(phi_iso(w))), "(φ⊗φ)Δ = Δφ on " + id);
            auto dw = [](const BlockWord& x) { return coproduct_ttb(x); };
            ck.expect(apply_in_slot(d, 0, 2, dw) == apply_in_slot(d, 1, 2, dw), "Δ_TTB coassociative on " + id);
            auto eps = [](const BlockWord& x) { return counit_ttb(x); };
            ck.expect(apply_scalar_in_slot(d, 0, eps) == BlockTensor::pure({w}) &&
                          apply_scalar_in_slot(d, 1, eps) == BlockTensor::pure({w}),
                      "counit laws for Δ_TTB on " + id);
        }
    for (int n = 1; n <= max; ++n)
        ck.expect_equal(quotient_a0(coproduct_bdif(gen(n))), coproduct_dif(gen(n)),
                        "quotient of Δ a" + std::to_string(n) + " in B^dif");
    for (int n = 0; n <= max; ++n)
        ck.expect_equal(coproduct_dif_via_recursion(n), coproduct_bdif(gen(n + 1)),
                        "recursive Δ a" + std::to_string(n + 1));
}

// ---------------------------------------------------------------------------------------------
// Series

struct SeriesSampler {
    explicit SeriesSampler(std::uint64_t seed) : rng(seed) {}

    Rational rational()
    {
        std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
        return Rational(num(rng), den(rng));
    }

    Matrix matrix(const MatrixAlgebra& alg)
    {
        Matrix m = alg.zero();
        for (auto& e : m.entries)
            e = rational();
        return m;
    }

    template <CoefficientAlgebra A, class Gen>
    Series<A> series(const A& alg, SeriesKind kind, int order, Gen&& g)
    {
        std::vector<typename A::value_type> tail;
        for (int n = 1; n <= order; ++n)
            tail.push_back(g());
        return Series<A>::from_tail(alg, kind, tail);
    }

    std::mt19937_64 rng;
};

template <CoefficientAlgebra A>
std::string format(const Series<A>& s)
{
    return format_series(s);
}

inline void series_duality(Checker& ck, int order, int samples, std::uint64_t seed)
{
    SeriesSampler smp(seed);
    RationalAlgebra q;
    MatrixAlgebra mat;
    const auto id = Series<RationalAlgebra>::identity(q, SeriesKind::Diffeo, order);
    for (int i = 0; i < samples; ++i) {
        const std::string tag = " sample " + std::to_string(i);
        const auto phi = smp.series(q, SeriesKind::Diffeo, order, [&] { return smp.rational(); });
        const auto psi = compositional_inverse_via_antipode(phi);
        ck.expect(psi == lagrange_oracle(phi), "inverse via antipode = Lagrange oracle" + tag,
                  [&] { return "φ =\n" + format_series(phi); });
        ck.expect(series_compose(phi, psi) == id && series_compose(psi, phi) == id, "φ∘ψ = ψ∘φ = id" + tag,
                  [&] { return "φ =\n" + format_series(phi); });
        const auto eta = smp.series(q, SeriesKind::Diffeo, order, [&] { return smp.rational(); });
        ck.expect(residue_compose(phi, eta) == series_compose(phi, eta), "residue composition" + tag);
        bool assoc = true;
        for (const auto& c : associator(phi, eta, psi))
            assoc = assoc && c == 0;
        ck.expect(assoc, "composition associative over Q" + tag);

        const auto f = smp.series(q, SeriesKind::Invertible, order, [&] { return smp.rational(); });
        const auto g = smp.series(q, SeriesKind::Invertible, order, [&] { return smp.rational(); });
        const auto one = Series<RationalAlgebra>::identity(q, SeriesKind::Invertible, order);
        ck.expect(series_mul(f, series_inv(f)) == one && series_mul(series_inv(f), f) == one,
                  "two-sided inverse over Q" + tag);
        const auto fg = series_mul(f, g);
        bool dual = true;
        for (int n = 0; n <= order; ++n) {
            Rational s = 0;
            for (const auto& [key, c] : coproduct_inv(gen(n)).terms())
                s += c * character_eval(NCPoly::monomial(key[0]), f) * character_eval(NCPoly::monomial(key[1]), g);
            dual = dual && s == fg[n];
        }
        ck.expect(dual, "character of Δ^inv b_n = (fg)_n" + tag);

        const auto mf = smp.series(mat, SeriesKind::Invertible, order, [&] { return smp.matrix(mat); });
        const auto mone = Series<MatrixAlgebra>::identity(mat, SeriesKind::Invertible, order);
        ck.expect(series_mul(mf, series_inv(mf)) == mone && series_mul(series_inv(mf), mf) == mone,
                  "two-sided inverse over 2×2 matrices" + tag);
        const auto mphi = smp.series(mat, SeriesKind::Diffeo, order, [&] { return smp.matrix(mat); });
        const auto mpsi = smp.series(mat, SeriesKind::Diffeo, order, [&] { return smp.matrix(mat); });
        const auto meta = smp.series(mat, SeriesKind::Diffeo, order, [&] { return smp.matrix(mat); });
        ck.expect(residue_compose(mphi, mpsi) == series_compose(mphi, mpsi), "residue composition, matrices" + tag);
        if (order >= 3) {
            const auto a = associator(mphi, mpsi, meta);
            const Matrix expected = mat.add(mat.mul(mat.mul(mphi[1], meta[1]), mpsi[1]),
                                            mat.neg(mat.mul(mat.mul(mphi[1], mpsi[1]), meta[1])));
            ck.expect(a[0] == mat.zero() && a[1] == mat.zero() && a[2] == mat.zero() && a[3] == expected,
                      "associator x^4 term = φ1η1ψ1 - φ1ψ1η1" + tag,
                      [&] { return "x^4 coefficient " + format_value(mat, a[3]) + ", expected " + format_value(mat, expected); });
        }
    }
    // (f^{-1})_2 = -f_2 + f_1^2 with formal coefficients
    NCPolyAlgebra free;
    const auto formal = Series<NCPolyAlgebra>::from_tail(free, SeriesKind::Invertible, {gen(1), gen(2), gen(3)});
    const auto finv = series_inv(formal);
    ck.expect_equal(finv[1], -gen(1), "(f^{-1})_1 = -f_1");
    ck.expect_equal(finv[2], -gen(2) + gen(1) * gen(1), "(f^{-1})_2 = -f_2 + f_1^2");
}

inline void binomial_identity(Checker& ck, int q_max, int n_max, int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> qd(1, q_max), nd(1, n_max);
    for (int i = 0; i < samples; ++i) {
        const int q = qd(rng);
        std::vector<int> t;
        for (int j = 0; j <= q; ++j)
            t.push_back(nd(rng));
        const Rational r = binomial_identity_residual(q, t);
        ck.expect(r == 0, "binomial identity q=" + std::to_string(q) + " " + tuple_text(t),
                  [&] { return "residual " + to_string(r); });
    }
}

} // namespace checks

// ---------------------------------------------------------------------------------------------
// Named suites

using SuiteFn = std::function<SuiteReport(const SuiteOptions&)>;

inline const std::map<std::string, SuiteFn>& suite_registry()
{
    static const std::map<std::string, SuiteFn> registry = {
        {"hopf-axioms-dif",
         [](const SuiteOptions& o) {
             Checker ck("hopf-axioms-dif");
             const int d = o.max_degree;
             checks::hopf_dif_axioms(ck, d, std::min(d, 6));
             checks::q_identities(ck, d);
             checks::q_structure(ck, std::min(d, 6));
             checks::generating_series_coproduct(ck, d);
             checks::faa_di_bruno(ck, d);
             checks::antipode_square(ck);
             return ck.take();
         }},
        {"hopf-axioms-inv",
         [](const SuiteOptions& o) {
             Checker ck("hopf-axioms-inv");
             checks::hopf_inv_axioms(ck, o.max_degree);
             return ck.take();
         }},
        {"antipode-equivalence",
         [](const SuiteOptions& o) {
             Checker ck("antipode-equivalence");
             checks::antipode_equivalence(ck, o.max_degree);
             checks::lambda_tables(ck, std::min(o.max_degree, 5), 4);
             return ck.take();
         }},
        {"coaction-laws",
         [](const SuiteOptions& o) {
             Checker ck("coaction-laws");
             checks::coaction_laws(ck, o.max_degree);
             return ck.take();
         }},
        {"smash-coassoc",
         [](const SuiteOptions& o) {
             Checker ck("smash-coassoc");
             checks::smash_laws(ck, o.max_degree);
             return ck.take();
         }},
        {"free-product",
         [](const SuiteOptions& o) {
             Checker ck("free-product");
             checks::free_product_laws(ck, o.max_degree);
             return ck.take();
         }},
        {"tree-embedding",
         [](const SuiteOptions& o) {
             Checker ck("tree-embedding");
             checks::tree_embedding(ck, o.max_degree);
             return ck.take();
         }},
        {"propagator-coproducts",
         [](const SuiteOptions& o) {
             Checker ck("propagator-coproducts");
             checks::propagator_coproducts(ck, o.max_degree);
             return ck.take();
         }},
        {"catalan-bijection",
         [](const SuiteOptions& o) {
             Checker ck("catalan-bijection");
             checks::catalan_bijection(ck, o.max_degree, std::min(o.max_degree, 10));
             return ck.take();
         }},
        {"ttb-iso",
         [](const SuiteOptions& o) {
             Checker ck("ttb-iso");
             checks::ttb_iso(ck, o.max_degree);
             return ck.take();
         }},
        {"series-duality",
         [](const SuiteOptions& o) {
             Checker ck("series-duality");
             checks::series_duality(ck, o.max_degree, 50, o.seed);
             return ck.take();
         }},
        {"resolvent",
         [](const SuiteOptions& o) {
             Checker ck("resolvent");
             for (int x = 0; x <= o.max_degree; ++x)
                 for (int y = 0; y < std::max(o.max_degree, 1); ++y) {
                     auto [l, r] = resolvent_sides(x, y);
                     ck.expect(l == r, "resolvent to orders (" + std::to_string(x) + "," + std::to_string(y) + ")");
                 }
             return ck.take();
         }},
        {"binomial-identity",
         [](const SuiteOptions& o) {
             Checker ck("binomial-identity");
             checks::binomial_identity(ck, std::max(o.max_degree, 1), std::max(o.max_degree, 1), 200, o.seed);
             return ck.take();
         }},
    };
    return registry;
}

inline std::vector<std::string> available_suites()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_registry())
        names.push_back(name);
    return names;
}

/// Throws std::invalid_argument listing the available suites for an unknown name.
inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opts)
{
    const auto& reg = suite_registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::string msg = "suite: unknown suite \"" + name + "\"; available:";
        for (const auto& n : available_suites())
            msg += " " + n;
        throw std::invalid_argument(msg);
    }
    if (opts.max_degree < 0)
        throw std::invalid_argument("max-degree: must be non-negative");
    return it->second(opts);
}

} // namespace nchopf
