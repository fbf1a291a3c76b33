#pragma once

// Truncated formal power series with coefficients in an associative unital algebra:
// products, inverses, composition of formal diffeomorphisms, characters and inversion oracles.

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hopf_dif.hpp"
#include "io.hpp"

namespace nchopf {

template <class A>
concept CoefficientAlgebra = requires(const A& a, const typename A::value_type& x, const Rational& r) {
    { a.zero() } -> std::convertible_to<typename A::value_type>;
    { a.one() } -> std::convertible_to<typename A::value_type>;
    { a.add(x, x) } -> std::convertible_to<typename A::value_type>;
    { a.neg(x) } -> std::convertible_to<typename A::value_type>;
    { a.mul(x, x) } -> std::convertible_to<typename A::value_type>;
    { a.scale(r, x) } -> std::convertible_to<typename A::value_type>;
    { a.equal(x, x) } -> std::convertible_to<bool>;
    { a.is_commutative() } -> std::convertible_to<bool>;
    { a == a } -> std::convertible_to<bool>;
};

struct RationalAlgebra {
    using value_type = Rational;
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational add(const Rational& x, const Rational& y) const { return x + y; }
    Rational neg(const Rational& x) const { return -x; }
    Rational mul(const Rational& x, const Rational& y) const { return x * y; }
    Rational scale(const Rational& r, const Rational& x) const { return r * x; }
    bool equal(const Rational& x, const Rational& y) const { return x == y; }
    bool is_commutative() const { return true; }
    friend bool operator==(const RationalAlgebra&, const RationalAlgebra&) = default;
};

/// Dense square matrix over Q, row-major.
struct Matrix {
    int dim = 0;
    std::vector<Rational> entries;

    const Rational& at(int i, int j) const { return entries[static_cast<std::size_t>(i * dim + j)]; }
    Rational& at(int i, int j) { return entries[static_cast<std::size_t>(i * dim + j)]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

struct MatrixAlgebra {
    using value_type = Matrix;
    int dim = 2;

    Matrix zero() const { return Matrix{dim, std::vector<Rational>(static_cast<std::size_t>(dim * dim))}; }
    Matrix one() const
    {
        Matrix m = zero();
        for (int i = 0; i < dim; ++i)
            m.at(i, i) = 1;
        return m;
    }
    /// Elementary matrix E_{ij}, 1-based as usual.
    Matrix elementary(int i, int j) const
    {
        Matrix m = zero();
        m.at(i - 1, j - 1) = 1;
        return m;
    }
    Matrix add(const Matrix& x, const Matrix& y) const
    {
        check(x), check(y);
        Matrix m = x;
        for (std::size_t k = 0; k < m.entries.size(); ++k)
            m.entries[k] += y.entries[k];
        return m;
    }
    Matrix neg(const Matrix& x) const { return scale(-1, x); }
    Matrix mul(const Matrix& x, const Matrix& y) const
    {
        check(x), check(y);
        Matrix m = zero();
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) {
                if (x.at(i, k) == 0)
                    continue;
                for (int j = 0; j < dim; ++j)
                    m.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return m;
    }
    Matrix scale(const Rational& r, const Matrix& x) const
    {
        Matrix m = x;
        for (auto& e : m.entries)
            e *= r;
        return m;
    }
    bool equal(const Matrix& x, const Matrix& y) const { return x == y; }
    bool is_commutative() const { return dim <= 1; }
    friend bool operator==(const MatrixAlgebra&, const MatrixAlgebra&) = default;

private:
    void check(const Matrix& x) const
    {
        if (x.dim != dim || x.entries.size() != static_cast<std::size_t>(dim * dim))
            throw std::invalid_argument("matrix dimension does not match the algebra");
    }
};

/// Free algebra on formal coefficient symbols (generic non-commuting coefficients).
struct NCPolyAlgebra {
    using value_type = NCPoly;
    NCPoly zero() const { return {}; }
    NCPoly one() const { return NCPoly(1); }
    NCPoly add(const NCPoly& x, const NCPoly& y) const { return x + y; }
    NCPoly neg(const NCPoly& x) const { return -x; }
    NCPoly mul(const NCPoly& x, const NCPoly& y) const { return x * y; }
    NCPoly scale(const Rational& r, const NCPoly& x) const { return x * r; }
    bool equal(const NCPoly& x, const NCPoly& y) const { return x == y; }
    bool is_commutative() const { return false; }
    friend bool operator==(const NCPolyAlgebra&, const NCPolyAlgebra&) = default;
};

enum class SeriesKind { Invertible, Diffeo };

/// Invertible: f(x) = Σ_{n=0}^N f_n x^n with f_0 = 1.
/// Diffeo: φ(x) = Σ_{n=0}^N φ_n x^{n+1} with φ_0 = 1.
/// coeffs[n] holds f_n (resp. φ_n); coeffs[0] is always the algebra unit.
template <CoefficientAlgebra A>
struct Series {
    using value_type = typename A::value_type;

    A algebra{};
    SeriesKind kind = SeriesKind::Invertible;
    int order = 0;
    std::vector<value_type> coeffs;

    static Series identity(const A& alg, SeriesKind kind, int order)
    {
        if (order < 0)
            throw std::invalid_argument("order must be non-negative");
        Series s{alg, kind, order, std::vector<value_type>(static_cast<std::size_t>(order) + 1, alg.zero())};
        s.coeffs[0] = alg.one();
        return s;
    }

    /// Builds a series from f_1..f_N (the leading coefficient is set to one).
    static Series from_tail(const A& alg, SeriesKind kind, const std::vector<value_type>& tail)
    {
        Series s = identity(alg, kind, static_cast<int>(tail.size()));
        for (std::size_t i = 0; i < tail.size(); ++i)
            s.coeffs[i + 1] = tail[i];
        return s;
    }

    const value_type& operator[](int n) const { return coeffs.at(static_cast<std::size_t>(n)); }

    void validate() const
    {
        if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
            throw std::invalid_argument("coeffs: expected order + 1 entries");
        if (!algebra.equal(coeffs[0], algebra.one()))
            throw std::invalid_argument("coeffs: leading coefficient must be one");
    }

    friend bool operator==(const Series& x, const Series& y)
    {
        if (!(x.algebra == y.algebra) || x.kind != y.kind || x.order != y.order)
            return false;
        for (std::size_t i = 0; i < x.coeffs.size(); ++i)
            if (!x.algebra.equal(x.coeffs[i], y.coeffs[i]))
                return false;
        return true;
    }
};

namespace detail {

template <CoefficientAlgebra A>
using Raw = std::vector<typename A::value_type>;

template <CoefficientAlgebra A>
void require_compatible(const Series<A>& f, const Series<A>& g, SeriesKind kind)
{
    if (!(f.algebra == g.algebra))
        throw std::invalid_argument("series: coefficient algebras differ");
    if (f.kind != kind || g.kind != kind)
        throw std::invalid_argument("series: wrong series kind for this operation");
    if (f.order != g.order)
        throw std::invalid_argument("series: truncation orders differ");
}

/// Product of truncated polynomials (coefficient lists by x-exponent), kept below x^len.
template <CoefficientAlgebra A>
Raw<A> raw_mul(const A& alg, const Raw<A>& p, const Raw<A>& q, std::size_t len)
{
    Raw<A> out(len, alg.zero());
    for (std::size_t i = 0; i < p.size() && i < len; ++i)
        for (std::size_t j = 0; j < q.size() && i + j < len; ++j)
            out[i + j] = alg.add(out[i + j], alg.mul(p[i], q[j]));
    return out;
}

/// x-exponent coefficients of a diffeomorphism, length order + 2.
template <CoefficientAlgebra A>
Raw<A> diffeo_raw(const Series<A>& s)
{
    Raw<A> r(s.coeffs.size() + 1, s.algebra.zero());
    for (std::size_t n = 0; n < s.coeffs.size(); ++n)
        r[n + 1] = s.coeffs[n];
    return r;
}

template <CoefficientAlgebra A>
Series<A> diffeo_from_raw(const A& alg, int order, const Raw<A>& r)
{
    Series<A> s{alg, SeriesKind::Diffeo, order, {}};
    for (int n = 0; n <= order; ++n)
        s.coeffs.push_back(r[static_cast<std::size_t>(n) + 1]);
    return s;
}

} // namespace detail

/// (fg)_n = Σ_k f_k g_{n-k}, f-coefficients on the left.
template <CoefficientAlgebra A>
Series<A> series_mul(const Series<A>& f, const Series<A>& g)
{
    detail::require_compatible(f, g, SeriesKind::Invertible);
    Series<A> out = f;
    out.coeffs = detail::raw_mul(f.algebra, f.coeffs, g.coeffs, f.coeffs.size());
    return out;
}

/// (f^{-1})_n = -Σ_{k=1}^n f_k (f^{-1})_{n-k}; the right inverse is checked afterwards.
template <CoefficientAlgebra A>
Series<A> series_inv(const Series<A>& f)
{
    if (f.kind != SeriesKind::Invertible)
        throw std::invalid_argument("series_inv expects an invertible series");
    const A& alg = f.algebra;
    Series<A> g = Series<A>::identity(alg, SeriesKind::Invertible, f.order);
    for (int n = 1; n <= f.order; ++n) {
        auto acc = alg.zero();
        for (int k = 1; k <= n; ++k)
            acc = alg.add(acc, alg.mul(f[k], g[n - k]));
        g.coeffs[static_cast<std::size_t>(n)] = alg.neg(acc);
    }
    if (!(series_mul(g, f) == Series<A>::identity(alg, SeriesKind::Invertible, f.order)))
        throw std::logic_error("series_inv: left inverse is not a right inverse");
    return g;
}

/// (φ∘ψ)(x) = ψ(x) + Σ_{n>=1} φ_n ψ(x)^{n+1}, modulo x^{N+2}.
template <CoefficientAlgebra A>
Series<A> series_compose(const Series<A>& phi, const Series<A>& psi)
{
    detail::require_compatible(phi, psi, SeriesKind::Diffeo);
    const A& alg = phi.algebra;
    const auto base = detail::diffeo_raw(psi);
    const std::size_t len = base.size();
    auto result = base;
    auto pw = base;
    for (int n = 1; n <= phi.order; ++n) {
        pw = detail::raw_mul(alg, pw, base, len);
        for (std::size_t i = 0; i < len; ++i)
            result[i] = alg.add(result[i], alg.mul(phi[n], pw[i]));
    }
    return detail::diffeo_from_raw(alg, phi.order, result);
}

/// Composition read off as the z^{-1} coefficient of φ(z) Σ_m ψ(x)^m z^{-m-1}.
/// The z-Laurent coefficients are tracked in a map keyed by the z-exponent.
template <CoefficientAlgebra A>
Series<A> residue_compose(const Series<A>& phi, const Series<A>& psi)
{
    detail::require_compatible(phi, psi, SeriesKind::Diffeo);
    const A& alg = phi.algebra;
    const auto base = detail::diffeo_raw(psi);
    const std::size_t len = base.size();

    // ψ(x)^m for m = 0 .. N+1; higher powers start beyond x^{N+1}.
    std::vector<detail::Raw<A>> powers;
    detail::Raw<A> unit(len, alg.zero());
    unit[0] = alg.one();
    powers.push_back(unit);
    for (std::size_t m = 1; m < len; ++m)
        powers.push_back(detail::raw_mul(alg, powers.back(), base, len));

    std::map<long, detail::Raw<A>> laurent;
    for (int n = 0; n <= phi.order; ++n) {
        for (std::size_t m = 0; m < powers.size(); ++m) {
            const long z_exp = static_cast<long>(n) + 1 - static_cast<long>(m) - 1;
            auto [it, fresh] = laurent.try_emplace(z_exp, detail::Raw<A>(len, alg.zero()));
            for (std::size_t i = 0; i < len; ++i)
                it->second[i] = alg.add(it->second[i], alg.mul(phi[n], powers[m][i]));
        }
    }
    auto it = laurent.find(-1);
    if (it == laurent.end())
        return detail::diffeo_from_raw(alg, phi.order, detail::Raw<A>(len, alg.zero()));
    return detail::diffeo_from_raw(alg, phi.order, it->second);
}

/// φ∘(ψ∘η) - (φ∘ψ)∘η; entry n is the coefficient of x^{n+1}.
template <CoefficientAlgebra A>
std::vector<typename A::value_type> associator(const Series<A>& phi, const Series<A>& psi, const Series<A>& eta)
{
    const auto left = series_compose(phi, series_compose(psi, eta));
    const auto right = series_compose(series_compose(phi, psi), eta);
    std::vector<typename A::value_type> out;
    for (int n = 0; n <= phi.order; ++n)
        out.push_back(phi.algebra.add(left[n], phi.algebra.neg(right[n])));
    return out;
}

/// The character a_n ↦ φ_n (or b_n ↦ f_n), extended multiplicatively; letter 0 maps to one.
template <CoefficientAlgebra A>
typename A::value_type character_eval(const NCPoly& p, const Series<A>& s)
{
    const A& alg = s.algebra;
    auto out = alg.zero();
    for (const auto& [w, c] : p.terms()) {
        auto v = alg.one();
        for (const Letter& l : w.letters()) {
            if (l.index > s.order)
                throw std::invalid_argument("character_eval: generator index " + std::to_string(l.index) +
                                            " exceeds series order " + std::to_string(s.order));
            v = alg.mul(v, s[l.index]);
        }
        out = alg.add(out, alg.scale(c, v));
    }
    return out;
}

/// ψ_n = character_eval(S a_n, φ), using the closed-form antipode. Commutative algebras only.
template <CoefficientAlgebra A>
Series<A> compositional_inverse_via_antipode(const Series<A>& phi)
{
    if (!phi.algebra.is_commutative())
        throw std::invalid_argument("compositional_inverse_via_antipode needs a commutative coefficient algebra");
    if (phi.kind != SeriesKind::Diffeo)
        throw std::invalid_argument("compositional_inverse_via_antipode expects a diffeomorphism");
    Series<A> psi = Series<A>::identity(phi.algebra, SeriesKind::Diffeo, phi.order);
    for (int n = 1; n <= phi.order; ++n)
        psi.coeffs[static_cast<std::size_t>(n)] = character_eval(antipode_closed(n), phi);
    return psi;
}

/// Compositional inverse by triangular solve: (φ∘ψ)_n is ψ_n plus terms in ψ_1..ψ_{n-1}.
template <CoefficientAlgebra A>
Series<A> lagrange_oracle(const Series<A>& phi)
{
    if (!phi.algebra.is_commutative())
        throw std::invalid_argument("lagrange_oracle needs a commutative coefficient algebra");
    if (phi.kind != SeriesKind::Diffeo)
        throw std::invalid_argument("lagrange_oracle expects a diffeomorphism");
    Series<A> psi = Series<A>::identity(phi.algebra, SeriesKind::Diffeo, phi.order);
    for (int n = 1; n <= phi.order; ++n) {
        const auto c = series_compose(phi, psi)[n];
        psi.coeffs[static_cast<std::size_t>(n)] = phi.algebra.neg(c);
    }
    return psi;
}

// ---------------------------------------------------------------------------------------------
// JSON and text

using AnySeries = std::variant<Series<RationalAlgebra>, Series<MatrixAlgebra>, Series<NCPolyAlgebra>>;

inline json value_to_json(const RationalAlgebra&, const Rational& r)
{
    return to_string(r);
}

inline json value_to_json(const MatrixAlgebra&, const Matrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.dim; ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim; ++j)
            row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline json value_to_json(const NCPolyAlgebra&, const NCPoly& p)
{
    return format(p, FormatOptions{'c', false});
}

inline json algebra_to_json(const RationalAlgebra&)
{
    return {{"type", "rational"}};
}

inline json algebra_to_json(const MatrixAlgebra& a)
{
    return {{"type", "matrix"}, {"dim", a.dim}};
}

inline json algebra_to_json(const NCPolyAlgebra&)
{
    return {{"type", "ncpoly"}};
}

inline const char* kind_name(SeriesKind k)
{
    return k == SeriesKind::Diffeo ? "diffeo" : "invertible";
}

template <CoefficientAlgebra A>
json series_to_json(const Series<A>& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs)
        coeffs.push_back(value_to_json(s.algebra, c));
    return {{"kind", kind_name(s.kind)}, {"order", s.order}, {"algebra", algebra_to_json(s.algebra)}, {"coeffs", coeffs}};
}

inline json series_to_json(const AnySeries& s)
{
    return std::visit([](const auto& x) { return series_to_json(x); }, s);
}

namespace detail {

inline Rational rational_from_json(const json& j, const std::string& field)
{
    try {
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long long>());
    } catch (const std::exception& e) {
        throw std::invalid_argument(field + ": " + e.what());
    }
    throw std::invalid_argument(field + ": expected a rational string");
}

inline Rational value_from_json(const RationalAlgebra&, const json& j, const std::string& field)
{
    return rational_from_json(j, field);
}

inline Matrix value_from_json(const MatrixAlgebra& a, const json& j, const std::string& field)
{
    if (!j.is_array() || j.size() != static_cast<std::size_t>(a.dim))
        throw std::invalid_argument(field + ": expected " + std::to_string(a.dim) + " rows");
    Matrix m = a.zero();
    for (int i = 0; i < a.dim; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(a.dim))
            throw std::invalid_argument(field + ": row " + std::to_string(i) + " must have " +
                                        std::to_string(a.dim) + " entries");
        for (int k = 0; k < a.dim; ++k)
            m.at(i, k) = rational_from_json(row[static_cast<std::size_t>(k)], field);
    }
    return m;
}

inline NCPoly value_from_json(const NCPolyAlgebra&, const json& j, const std::string& field)
{
    try {
        if (j.is_string())
            return parse_poly(j.get<std::string>());
        return poly_from_json(j);
    } catch (const std::exception& e) {
        throw std::invalid_argument(field + ": " + e.what());
    }
}

template <CoefficientAlgebra A>
Series<A> series_from_json_as(const A& alg, SeriesKind kind, int order, const json& coeffs)
{
    if (!coeffs.is_array())
        throw std::invalid_argument("coeffs: expected an array");
    if (coeffs.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("coeffs: expected order + 1 = " + std::to_string(order + 1) + " entries, got " +
                                    std::to_string(coeffs.size()));
    Series<A> s{alg, kind, order, {}};
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s.coeffs.push_back(value_from_json(alg, coeffs[i], "coeffs[" + std::to_string(i) + "]"));
    s.validate();
    return s;
}

} // namespace detail

/// Reads `{"kind":..., "order":N, "algebra":{"type":...}, "coeffs":[c_0, ..., c_N]}`.
/// Errors name the offending field.
inline AnySeries series_from_json(const json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("series: expected a JSON object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw std::invalid_argument("kind: missing or not a string");
    const std::string kind_s = j.at("kind").get<std::string>();
    SeriesKind kind;
    if (kind_s == "diffeo")
        kind = SeriesKind::Diffeo;
    else if (kind_s == "invertible")
        kind = SeriesKind::Invertible;
    else
        throw std::invalid_argument("kind: expected \"diffeo\" or \"invertible\", got \"" + kind_s + "\"");
    if (!j.contains("order") || !j.at("order").is_number_integer() || j.at("order").get<int>() < 0)
        throw std::invalid_argument("order: missing or not a non-negative integer");
    const int order = j.at("order").get<int>();
    if (!j.contains("coeffs"))
        throw std::invalid_argument("coeffs: missing");
    std::string type = "rational";
    json alg = j.value("algebra", json::object());
    if (!alg.is_object())
        throw std::invalid_argument("algebra: expected an object");
    if (alg.contains("type")) {
        if (!alg.at("type").is_string())
            throw std::invalid_argument("algebra.type: expected a string");
        type = alg.at("type").get<std::string>();
    }
    if (type == "rational")
        return detail::series_from_json_as(RationalAlgebra{}, kind, order, j.at("coeffs"));
    if (type == "matrix") {
        int dim = 2;
        if (alg.contains("dim")) {
            if (!alg.at("dim").is_number_integer() || alg.at("dim").get<int>() < 1)
                throw std::invalid_argument("algebra.dim: expected a positive integer");
            dim = alg.at("dim").get<int>();
        }
        return detail::series_from_json_as(MatrixAlgebra{dim}, kind, order, j.at("coeffs"));
    }
    if (type == "ncpoly")
        return detail::series_from_json_as(NCPolyAlgebra{}, kind, order, j.at("coeffs"));
    throw std::invalid_argument("algebra.type: unknown algebra \"" + type + "\" (expected rational, matrix, ncpoly)");
}

inline std::string format_value(const RationalAlgebra&, const Rational& r)
{
    return to_string(r);
}

inline std::string format_value(const MatrixAlgebra&, const Matrix& m)
{
    std::string out = "[";
    for (int i = 0; i < m.dim; ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < m.dim; ++j)
            out += (j ? " " : "") + to_string(m.at(i, j));
    }
    return out + "]";
}

inline std::string format_value(const NCPolyAlgebra&, const NCPoly& p)
{
    return format(p, FormatOptions{'c', false});
}

/// One line per coefficient: `x^k: value`, using the x-exponent of each coefficient.
template <CoefficientAlgebra A>
std::string format_series(const Series<A>& s)
{
    std::string out;
    const int shift = s.kind == SeriesKind::Diffeo ? 1 : 0;
    for (int n = 0; n <= s.order; ++n)
        out += "x^" + std::to_string(n + shift) + ": " + format_value(s.algebra, s[n]) + "\n";
    return out;
}

} // namespace nchopf
